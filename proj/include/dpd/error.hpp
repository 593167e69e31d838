#ifndef DPD_ERROR_HPP
#define DPD_ERROR_HPP

#include <stdexcept>
#include <string>

namespace dpd {

// Raised when an enumeration or rank request exceeds the library's hard
// limits. Callers get this error instead of truncated output.
class budget_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Malformed input text; position() is a 0-based byte offset into the input.
class parse_error : public std::runtime_error {
  public:
    parse_error(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"), pos_(pos) {}
    std::size_t position() const noexcept { return pos_; }

  private:
    std::size_t pos_;
};

} // namespace dpd

#endif
