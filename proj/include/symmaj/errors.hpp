#ifndef SYMMAJ_ERRORS_HPP
#define SYMMAJ_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace symmaj {

/// An enumeration would exceed its configured cap. `required()` is the
/// cardinality that was asked for, saturated at UINT64_MAX.
class ResourceError : public std::runtime_error {
public:
  ResourceError(std::string const &what, std::uint64_t required, std::uint64_t cap)
      : std::runtime_error(what + ": requires " + std::to_string(required) +
                           ", cap is " + std::to_string(cap)),
        required_(required), cap_(cap) {}

  std::uint64_t required() const { return required_; }
  std::uint64_t cap() const { return cap_; }

private:
  std::uint64_t required_;
  std::uint64_t cap_;
};

} // namespace symmaj

#endif // SYMMAJ_ERRORS_HPP
