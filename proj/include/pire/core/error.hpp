#pragma once

#include <stdexcept>
#include <string>

namespace pire {

/// Malformed input: bad schema, dangling references, structurally invalid
/// walks or rotations. The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Well-formed input that fails a domain precondition or check (not planar,
/// not degree-faithful, palette exhausted). The CLI maps this to exit code 1.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pire
