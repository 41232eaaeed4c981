#ifndef VEXL_INSTANCE_IO_HPP
#define VEXL_INSTANCE_IO_HPP

#include <map>
#include <stdexcept>
#include <string>

#include "vexl/domain.hpp"

namespace vexl {

/// Malformed document: not JSON, or fields of the wrong shape/type.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Well-formed document whose content breaks a domain invariant
/// (non-positive measure, misaligned row, negative value, ...).
struct InvariantError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// On-disk instance: one partition with per-cell exponents, shared by any
/// number of named sequences. The string "inf" is the only encoding of
/// infinity, both here and in reports.
///
///   {
///     "cells": [ {"measure": 1.0, "p": 1, "q": "inf"}, ... ],
///     "sequences": { "f": [[1, 0], [0, 1]], ... }
///   }
struct InstanceFile {
  Partition partition;
  ExponentPair exponents;
  std::map<std::string, FunctionSequence> sequences;

  const FunctionSequence& sequence(const std::string& name) const;
};

InstanceFile parse_instance_json(const std::string& text);
InstanceFile load_instance_file(const std::string& path);
std::string serialize_instance(const InstanceFile& file);

/// Formats a double the way reports do: shortest round-trip decimal, with
/// "inf" for infinity. Keeps report bytes stable for fixed inputs.
std::string format_number(double v);

}  // namespace vexl

#endif  // VEXL_INSTANCE_IO_HPP
