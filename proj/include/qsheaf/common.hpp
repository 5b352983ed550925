#pragma once

#include <stdexcept>
#include <string>

namespace qsheaf {

/// Error kinds surfaced by the library. Each maps to one named failure mode
/// of an operation's contract.
enum class errc {
  not_a_partial_order,
  not_a_lattice,
  size_cap_exceeded,
  element_not_in_quasipoint,
  dimension_mismatch,
  not_hermitian,
  not_a_line,
  sublevel_not_subspace,
  not_monotone,
  not_bounded,
  line_outside_domain,
  not_unit_vector,
  not_orthonormal,
  sector_mismatch,
  not_positive,
  not_adapted,
  not_a_spectral_family,
  not_measurable,
  point_not_admissible,
  unsupported_rule,
  not_a_topology,
  not_a_sigma_algebra,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::not_a_partial_order: return "NotAPartialOrder";
    case errc::not_a_lattice: return "NotALattice";
    case errc::size_cap_exceeded: return "SizeCapExceeded";
    case errc::element_not_in_quasipoint: return "ElementNotInQuasipoint";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::not_hermitian: return "NotHermitian";
    case errc::not_a_line: return "NotALine";
    case errc::sublevel_not_subspace: return "SublevelNotSubspace";
    case errc::not_monotone: return "NotMonotone";
    case errc::not_bounded: return "NotBounded";
    case errc::line_outside_domain: return "LineOutsideDomain";
    case errc::not_unit_vector: return "NotUnitVector";
    case errc::not_orthonormal: return "NotOrthonormal";
    case errc::sector_mismatch: return "SectorMismatch";
    case errc::not_positive: return "NotPositive";
    case errc::not_adapted: return "NotAdapted";
    case errc::not_a_spectral_family: return "NotASpectralFamily";
    case errc::not_measurable: return "NotMeasurable";
    case errc::point_not_admissible: return "PointNotAdmissible";
    case errc::unsupported_rule: return "UnsupportedRule";
    case errc::not_a_topology: return "NotATopology";
    case errc::not_a_sigma_algebra: return "NotASigmaAlgebra";
  }
  return "UnknownError";
}

/// Library exception carrying a typed error code.
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace qsheaf
