#pragma once

#include <stdexcept>

namespace gbei {

// Input exceeds a configured enumeration cap.
class SizeLimitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace gbei
