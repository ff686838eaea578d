#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qes2d {

enum class Errc {
  InvalidInput,
  Degenerate,
  IllConditioned,
  NonNormalizable,
  CatalogRange,
  ZeroCoupling,
  NoConvergence,
  Mismatch,
};

std::string_view to_string(Errc code);

/// Exception carrying one of the library's error conditions.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace qes2d
