#pragma once

#include <stdexcept>
#include <string>

namespace toric_ci {

// Library errors carry a stable machine-readable code next to the message;
// the CLI maps codes onto exit classes.
class toric_error : public std::runtime_error {
  public:
    toric_error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

  private:
    std::string code_;
};

struct syntax_error : toric_error {
    explicit syntax_error(const std::string& m) : toric_error("SyntaxError", m) {}
};
struct unknown_variable_error : toric_error {
    explicit unknown_variable_error(const std::string& m) : toric_error("UnknownVariable", m) {}
};
struct not_homogeneous_error : toric_error {
    explicit not_homogeneous_error(const std::string& m) : toric_error("NotHomogeneous", m) {}
};
struct unbounded_fiber_error : toric_error {
    explicit unbounded_fiber_error(const std::string& m) : toric_error("UnboundedFiber", m) {}
};
struct not_cartier_error : toric_error {
    explicit not_cartier_error(const std::string& m) : toric_error("NotCartier", m) {}
};
struct invalid_input_error : toric_error {
    explicit invalid_input_error(const std::string& m) : toric_error("InvalidInput", m) {}
};
struct hypothesis_error : toric_error {
    explicit hypothesis_error(const std::string& m) : toric_error("HypothesisViolated", m) {}
};
struct internal_error : toric_error {
    explicit internal_error(const std::string& m) : toric_error("InternalInconsistency", m) {}
};

}  // namespace toric_ci
