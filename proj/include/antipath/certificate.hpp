#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "antipath/antipath.hpp"
#include "antipath/bound.hpp"
#include "antipath/pathfinder.hpp"

namespace antipath {

inline constexpr std::string_view kEngineVersion = "antipath-engine 1.0.0";
inline constexpr std::string_view kCertificateFormat = "antipath-certificate/1";

enum class CertificateKind { Antipath, Anticycle, Violation, NotGuaranteed };
std::string to_string(CertificateKind kind);

class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Self-contained claim about a graph, checkable without the engine.
struct Certificate {
  std::string graph_hash;
  CertificateKind kind = CertificateKind::Antipath;
  std::vector<Vertex> vertices;
  int k = 0;
  Orientation orientation = Orientation::ForwardFirst;
  std::string engine_version{kEngineVersion};

  std::optional<StepFailure> failure;    ///< kind == Violation (optionally NotGuaranteed)
  std::optional<DegreeBound> bound;      ///< kind == NotGuaranteed
  std::optional<int> pseudo_delta0;      ///< kind == NotGuaranteed
  std::optional<Rational> peel_threshold;
  std::string reason;
};

Certificate make_certificate(const Digraph& d, const SearchOutcome& outcome, int k, Orientation orient);

std::string to_json_text(const Certificate& c);
/// Throws CertificateError on malformed input.
Certificate parse_certificate(std::string_view text);

struct Verdict {
  bool ok = false;
  std::string message;  ///< first failing invariant, or a summary when ok
};

/// Re-derive the certificate's claim from the graph alone.
Verdict verify_certificate(const Digraph& d, const Certificate& c);

}  // namespace antipath
