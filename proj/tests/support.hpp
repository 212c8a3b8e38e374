#pragma once

#include <doctest.h>

#include "cohomolib/rational.hpp"

namespace doctest {
template <>
struct StringMaker<cohomolib::IVec> {
  static String convert(const cohomolib::IVec& v) { return ("(" + cohomolib::join(v) + ")").c_str(); }
};
template <>
struct StringMaker<cohomolib::QOmega> {
  static String convert(const cohomolib::QOmega& x) { return cohomolib::to_string(x).c_str(); }
};
template <>
struct StringMaker<cohomolib::Q> {
  static String convert(const cohomolib::Q& x) { return cohomolib::to_string(x).c_str(); }
};
}  // namespace doctest
