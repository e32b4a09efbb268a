#include "bartree/num_format.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

#include "bartree/errors.hpp"

namespace bartree {

std::string format_double(double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value);
  if (res.ec != std::errc()) {
    throw InternalError("format_double: conversion failed");
  }
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view text) {
  if (text.empty()) {
    throw ParseError("empty numeric field");
  }
  double value = 0.0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw ParseError("malformed numeric field: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace bartree
