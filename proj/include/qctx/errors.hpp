#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qctx {

enum class Errc {
  dimension_mismatch,
  not_normalized,
  degenerate_span,
  out_of_domain,
  missing_assignment,
  invalid_network,
  empty_chain,
  incomplete_context,
  empty_trials,
  parse_error,
};

constexpr std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::not_normalized: return "NotNormalized";
    case Errc::degenerate_span: return "DegenerateSpan";
    case Errc::out_of_domain: return "OutOfDomain";
    case Errc::missing_assignment: return "MissingAssignment";
    case Errc::invalid_network: return "InvalidNetwork";
    case Errc::empty_chain: return "EmptyChain";
    case Errc::incomplete_context: return "IncompleteContext";
    case Errc::empty_trials: return "EmptyTrials";
    case Errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the Errc codes so
/// callers (and the CLI exit-code mapping) can dispatch on it.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace qctx
