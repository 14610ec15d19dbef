#include "gvf/error.hpp"

#include <utility>

namespace gvf {

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(message), kind_(kind), message_(message), full_(message) {}

void Error::set_step(std::string step) {
  step_ = std::move(step);
  full_ = step_.empty() ? message_ : step_ + ": " + message_;
}

}  // namespace gvf
