#include "antipath/certificate.hpp"

#include <json.hpp>

#include "antipath/graph_io.hpp"
#include "antipath/peel.hpp"

namespace antipath {

using nlohmann::json;

std::string to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::Antipath: return "antipath";
    case CertificateKind::Anticycle: return "anticycle";
    case CertificateKind::Violation: return "violation";
    case CertificateKind::NotGuaranteed: return "not_guaranteed";
  }
  return "unknown";
}

namespace {

CertificateKind parse_kind(const std::string& s) {
  for (auto k : {CertificateKind::Antipath, CertificateKind::Anticycle, CertificateKind::Violation, CertificateKind::NotGuaranteed})
    if (to_string(k) == s) return k;
  throw CertificateError("unknown certificate kind '" + s + "'");
}

json rational_json(const Rational& r) { return {{"num", r.num}, {"den", r.den}}; }
Rational rational_from(const json& j) { return Rational(j.at("num").get<std::int64_t>(), j.at("den").get<std::int64_t>()); }

json bound_json(const DegreeBound& b) {
  json j = rational_json(b.value());
  j["strict"] = b.strict();
  return j;
}
DegreeBound bound_from(const json& j) {
  const Rational r = rational_from(j);
  return j.at("strict").get<bool>() ? DegreeBound::above(r) : DegreeBound::at_least(r);
}

json failure_json(const StepFailure& f) {
  return {{"step", f.step},         {"witness", f.witness}, {"side", to_string(f.side)},
          {"degree", f.degree},     {"bound", bound_json(f.asserted)}, {"detail", f.detail}};
}
StepFailure failure_from(const json& j) {
  StepFailure f;
  f.step = j.at("step").get<std::string>();
  f.witness = j.at("witness").get<Vertex>();
  const auto side = j.at("side").get<std::string>();
  if (side != "out" && side != "in") throw CertificateError("violation side must be 'out' or 'in'");
  f.side = side == "out" ? DegreeSide::Out : DegreeSide::In;
  f.degree = j.at("degree").get<int>();
  f.asserted = bound_from(j.at("bound"));
  f.detail = j.value("detail", "");
  return f;
}

// Graph the degree claims refer to: D itself, or its peeled core.
Digraph claim_host(const Digraph& d, const Certificate& c) {
  return c.peel_threshold ? peel(d, *c.peel_threshold) : d;
}

Verdict fail(std::string message) { return {false, std::move(message)}; }

}  // namespace

Certificate make_certificate(const Digraph& d, const SearchOutcome& outcome, int k, Orientation orient) {
  Certificate c;
  c.graph_hash = graph_hash(d);
  c.k = k;
  c.orientation = orient;
  if (const auto* f = std::get_if<Found>(&outcome)) {
    c.kind = CertificateKind::Antipath;
    c.vertices = f->path.verts();
  } else if (const auto* ng = std::get_if<NotGuaranteed>(&outcome)) {
    c.kind = CertificateKind::NotGuaranteed;
    if (ng->best_path) c.vertices = ng->best_path->verts();
    c.failure = ng->failure;
    c.bound = ng->bound;
    c.pseudo_delta0 = ng->pseudo_delta0;
    c.peel_threshold = ng->peel_threshold;
    c.reason = ng->reason;
  } else {
    const auto& hv = std::get<HypothesisViolation>(outcome);
    c.kind = CertificateKind::Violation;
    c.failure = hv.failure;
    c.peel_threshold = hv.peel_threshold;
    c.reason = hv.failure.step + ": " + hv.failure.detail;
  }
  return c;
}

std::string to_json_text(const Certificate& c) {
  json j;
  j["format"] = kCertificateFormat;
  j["graph_hash"] = c.graph_hash;
  j["kind"] = to_string(c.kind);
  j["k"] = c.k;
  j["orientation"] = to_string(c.orientation);
  j["vertices"] = c.vertices;
  j["engine_version"] = c.engine_version;
  if (c.failure) j["violation"] = failure_json(*c.failure);
  if (c.bound) j["bound"] = bound_json(*c.bound);
  if (c.pseudo_delta0) j["pseudo_semidegree"] = *c.pseudo_delta0;
  if (c.peel_threshold) j["peel_threshold"] = rational_json(*c.peel_threshold);
  if (!c.reason.empty()) j["reason"] = c.reason;
  return j.dump(2) + "\n";
}

Certificate parse_certificate(std::string_view text) {
  try {
    const json j = json::parse(text);
    if (j.value("format", "") != kCertificateFormat) throw CertificateError("not an antipath certificate (format field)");
    Certificate c;
    c.graph_hash = j.at("graph_hash").get<std::string>();
    c.kind = parse_kind(j.at("kind").get<std::string>());
    c.k = j.at("k").get<int>();
    const auto orient = parse_orientation(j.at("orientation").get<std::string>());
    if (!orient) throw CertificateError("orientation must be forward-first or backward-first");
    c.orientation = *orient;
    c.vertices = j.at("vertices").get<std::vector<Vertex>>();
    c.engine_version = j.value("engine_version", "");
    if (j.contains("violation")) c.failure = failure_from(j.at("violation"));
    if (j.contains("bound")) c.bound = bound_from(j.at("bound"));
    if (j.contains("pseudo_semidegree")) c.pseudo_delta0 = j.at("pseudo_semidegree").get<int>();
    if (j.contains("peel_threshold")) c.peel_threshold = rational_from(j.at("peel_threshold"));
    c.reason = j.value("reason", "");
    return c;
  } catch (const json::exception& e) {
    throw CertificateError(std::string("malformed certificate: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw CertificateError(std::string("malformed certificate: ") + e.what());
  }
}

Verdict verify_certificate(const Digraph& d, const Certificate& c) {
  const std::string actual = graph_hash(d);
  if (actual != c.graph_hash) return fail("graph_hash mismatch: certificate " + c.graph_hash + ", graph " + actual);

  switch (c.kind) {
    case CertificateKind::Antipath: {
      if (auto defect = antipath_defect(d, c.vertices)) return fail(describe(*defect));
      const AntiPath p = validate_antipath(d, c.vertices);
      if (p.length() != c.k)
        return fail("length mismatch: path has " + std::to_string(p.length()) + " edges, k = " + std::to_string(c.k));
      if (p.length() >= 1 && p.orientation() != c.orientation)
        return fail("orientation mismatch: path is " + to_string(p.orientation()));
      return {true, "valid antipath of length " + std::to_string(c.k) + ", " + to_string(c.orientation)};
    }
    case CertificateKind::Anticycle: {
      if (auto defect = anticycle_defect(d, c.vertices)) return fail(describe(*defect));
      if (static_cast<int>(c.vertices.size()) != c.k)
        return fail("length mismatch: cycle has " + std::to_string(c.vertices.size()) + " edges, k = " + std::to_string(c.k));
      return {true, "valid anticycle of length " + std::to_string(c.k)};
    }
    case CertificateKind::Violation: {
      if (!c.failure) return fail("violation certificate without a violation block");
      const Digraph host = claim_host(d, c);
      const StepFailure& f = *c.failure;
      if (!host.contains(f.witness)) return fail("witness " + std::to_string(f.witness) + " out of range");
      const int degree = f.side == DegreeSide::Out ? host.out_degree(f.witness) : host.in_degree(f.witness);
      if (degree != f.degree)
        return fail("witness degree mismatch: claimed " + std::to_string(f.degree) + ", recomputed " + std::to_string(degree));
      if (degree <= 0) return fail("witness degree is 0, which every pseudo-semidegree bound allows");
      if (f.asserted.holds(degree)) return fail("witness degree " + std::to_string(degree) + " satisfies " + f.asserted.to_string());
      return {true, "witness " + std::to_string(f.witness) + " has " + to_string(f.side) + "-degree " + std::to_string(degree) +
                        ", failing " + f.asserted.to_string()};
    }
    case CertificateKind::NotGuaranteed: {
      if (!c.bound || !c.pseudo_delta0) return fail("not_guaranteed certificate without bound/pseudo_semidegree");
      const int pseudo = pseudo_semidegree(claim_host(d, c));
      if (pseudo != *c.pseudo_delta0)
        return fail("pseudo-semidegree mismatch: claimed " + std::to_string(*c.pseudo_delta0) + ", recomputed " +
                    std::to_string(pseudo));
      if (c.bound->holds(pseudo))
        return fail("hypothesis " + c.bound->to_string() + " holds (pseudo-semidegree " + std::to_string(pseudo) + ")");
      if (!c.vertices.empty())
        if (auto defect = antipath_defect(d, c.vertices)) return fail("best path: " + describe(*defect));
      return {true, "hypothesis " + c.bound->to_string() + " fails: pseudo-semidegree " + std::to_string(pseudo)};
    }
  }
  return fail("unknown certificate kind");
}

}  // namespace antipath
