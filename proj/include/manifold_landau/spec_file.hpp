#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "manifold_landau/auxfun.hpp"
#include "manifold_landau/curves.hpp"

namespace manifold_landau {

/// Malformed curve spec. `key()` is the dotted path of the first bad key.
class SpecError : public Error {
 public:
  SpecError(const std::string& key, const std::string& what)
      : Error(key.empty() ? what : key + ": " + what), key_(key) {}
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

struct AuxSpec {
  AuxKind kind = AuxKind::ChordalHalfSquare;
  /// Empty means "use the Chebyshev centre of the window samples".
  std::optional<AmbientVector> center;
};

/// Parsed curve spec document (JSON): the curve, its window, the auxiliary
/// function and the random seed.
struct CurveSpec {
  Curve curve;
  std::optional<TimeWindow> window;
  AuxSpec aux;
  std::uint64_t seed = 42;

  /// The explicit window, or natural_window(curve).
  TimeWindow resolved_window() const { return window ? *window : natural_window(curve); }
  bool chebyshev_center() const noexcept { return !aux.center.has_value(); }
  /// U for explicit centres; throws InvalidInput for the Chebyshev path.
  AuxFunction aux_function() const;
};

/// Parses a spec document. Relative `csv` paths resolve against `base_dir`.
/// Throws SpecError naming the first unknown, missing or invalid key.
CurveSpec parse_curve_spec(const std::string& text, const std::filesystem::path& base_dir = {});
CurveSpec load_curve_spec(const std::filesystem::path& path);

}  // namespace manifold_landau
