#pragma once

#include <stdexcept>
#include <string>

namespace rkp {

/// An iterative solver failed to converge.
class numeric_error : public std::runtime_error {
  public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rkp
