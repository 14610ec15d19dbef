#ifndef GVF_ERROR_HPP
#define GVF_ERROR_HPP

#include <stdexcept>
#include <string>

namespace gvf {

enum class ErrorKind {
  input,       // malformed or out-of-contract arguments
  infeasible,  // guiding set violates the distance condition
  io,          // file could not be read or written
  internal
};

/// Base exception for the library. `step()` names the pipeline stage that
/// failed once an orchestrator has annotated it; empty otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& message() const noexcept { return message_; }
  const std::string& step() const noexcept { return step_; }

  void set_step(std::string step);
  const char* what() const noexcept override { return full_.c_str(); }

 private:
  ErrorKind kind_;
  std::string message_;
  std::string step_;
  std::string full_;
};

inline Error input_error(const std::string& message) {
  return Error(ErrorKind::input, message);
}

}  // namespace gvf

#endif  // GVF_ERROR_HPP
