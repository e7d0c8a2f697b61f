#pragma once

#include <boost/rational.hpp>
#include <string>

namespace curvedrift {

using Rational = boost::rational<long long>;

inline std::string to_string(const Rational& q) {
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

}  // namespace curvedrift
