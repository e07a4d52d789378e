#pragma once

#include "hurwitz/exp_laurent.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/power_series.hpp"

#include <doctest.h>

namespace doctest {

template <>
struct StringMaker<hurwitz::Partition> {
  static String convert(const hurwitz::Partition& p) { return p.to_string().c_str(); }
};

template <>
struct StringMaker<hurwitz::ExpLaurent> {
  static String convert(const hurwitz::ExpLaurent& f) { return hurwitz::to_string(f).c_str(); }
};

template <>
struct StringMaker<hurwitz::PowerSeries> {
  static String convert(const hurwitz::PowerSeries& f) { return hurwitz::to_string(f).c_str(); }
};

template <class T>
struct StringMaker<std::optional<T>> {
  static String convert(const std::optional<T>& v)
  {
    return v ? toString(*v) : String("nullopt");
  }
};

} // namespace doctest
