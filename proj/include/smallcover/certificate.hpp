#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <cstdint>
#include <string>
#include <vector>

#include "smallcover/builtin.hpp"
#include "smallcover/charclass.hpp"
#include "smallcover/coloring.hpp"
#include "smallcover/digest.hpp"
#include "smallcover/extension.hpp"
#include "smallcover/face.hpp"
#include "smallcover/symmetry.hpp"

namespace smallcover {

class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr const char* kCertificateMagic = "smallcover-certificate 1";

// How c was chosen; decides which facts the conclusion needs.
enum class ClassMode { kAuto, kW1, kExplicit };

inline std::string to_string(ClassMode m) {
  switch (m) {
    case ClassMode::kAuto: return "auto";
    case ClassMode::kW1: return "w1";
    default: return "explicit";
  }
}

inline ClassMode parse_class_mode(const std::string& s) {
  if (s == "auto") return ClassMode::kAuto;
  if (s == "w1") return ClassMode::kW1;
  if (s == "explicit") return ClassMode::kExplicit;
  throw ParseError("unknown class mode '" + s + "'");
}

struct CertificateInputs {
  std::string base_ref;
  SchemePtr base;
  std::string ambient_ref;
  SchemePtr ambient;
  Coloring x;
  HypersurfaceClassVector c;
  ClassMode mode = ClassMode::kAuto;
  int facet_q = 0;
  std::vector<int> matching;  // P facet i -> Q facet matching[i-1]
  Coloring y;
  std::uint64_t seed = 0;
};

struct CertificateFact {
  std::string id;
  bool value = false;
  std::string statement;
  std::string method;

  std::string line() const {
    return "FACT " + id + " " + (value ? "true" : "false") + " | " + statement + " | " + method;
  }
};

struct GrantedFact {
  std::string statement;
  std::string reference;
  std::string line() const { return "GRANT " + statement + " | " + reference; }
};

inline std::string scheme_digest(const RightAngledScheme& s) { return sha256_hex(s.serialize()); }

namespace detail {

inline std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

inline std::string join_colors(const std::vector<BitVector>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].to_string();
  return out;
}

inline std::string wname(std::size_t d) { return "w" + std::to_string(d); }

inline bool fact_holds(const std::vector<CertificateFact>& facts, const std::string& id) {
  for (const auto& f : facts) {
    if (f.id == id) return f.value;
  }
  return false;
}

}  // namespace detail

// Facts every certificate checks, in a fixed order. Replay calls this again on
// the recorded inputs and compares line by line.
inline std::vector<CertificateFact> evaluate_facts(const CertificateInputs& in) {
  const std::size_t n = static_cast<std::size_t>(in.base->dim());
  std::vector<CertificateFact> out;

  const bool x_small = is_small_cover(in.x);
  out.push_back({"small_cover_X", x_small, "X is a small cover over the base scheme",
                 "rank test at all " + std::to_string(in.base->num_vertices()) + " vertices, span rank " +
                     std::to_string(components(in.x).span_rank)});

  const ProperCheck y_proper = is_proper(in.y);
  out.push_back({"proper_Y", y_proper.proper, "Y coloring is proper",
                 "rank test at all " + std::to_string(in.ambient->num_vertices()) + " vertices"});

  const ComponentInfo y_comp = components(in.y);
  out.push_back({"connected_Y", y_comp.codim == 0, "Y is connected",
                 "colors span GF(2)^" + std::to_string(in.y.m()) + " with rank " + std::to_string(y_comp.span_rank)});

  bool matching_ok = true;
  std::string matching_note = "vertex images checked";
  try {
    check_matching(*in.base, *in.ambient, in.facet_q, in.matching);
  } catch (const std::exception& e) {
    matching_ok = false;
    matching_note = e.what();
  }
  out.push_back({"matching", matching_ok,
                 "matching is an isomorphism from the base scheme onto facet " + std::to_string(in.facet_q), matching_note});

  bool induced_ok = false;
  std::string induced_note = "skipped";
  if (matching_ok) {
    const FaceRef f = face(*in.ambient, {in.facet_q});
    const InducedColoring induced = induced_coloring(in.y, f);
    const Coloring pulled = pull_back_to_base(induced, f, in.base, in.matching);
    const auto a = detail::basis_coordinates(pulled.colors(), pulled.m());
    const auto b = detail::basis_coordinates(in.x.colors(), in.x.m());
    induced_ok = a == b && components(pulled).span_rank == n;
    induced_note = "quotient by the color of facet " + std::to_string(in.facet_q) + ", " +
                   "2^" + std::to_string(induced.components.codim) + " components";
  }
  out.push_back({"induced_X", induced_ok,
                 "each component over facet " + std::to_string(in.facet_q) + " is X (induced coloring equals X up to GL)",
                 induced_note});

  std::optional<SWData> sw;
  if (x_small) sw = total_sw(in.x);

  bool normal_ok = false;
  std::string normal_note = "skipped";
  if (matching_ok && sw && in.c.size() == in.x.num_facets()) {
    const HypersurfaceClassVector nu = normal_bundle_w1(in.y, in.facet_q, in.matching);
    const auto k = in.x.num_facets();
    normal_ok = sw->ring->is_zero(Polynomial::linear_form(k, nu) + Polynomial::linear_form(k, in.c));
    normal_note = "facet coefficients " + nu.to_string();
  }
  out.push_back({"normal_bundle", normal_ok, "w1(normal bundle of X in Y) = c in H^1(X)", normal_note});

  bool nonvanishing = false;
  std::string target_note = "skipped";
  if (sw && in.c.size() == in.x.num_facets()) {
    const CohomologyElement t = whitney_target(*sw, in.c, n);
    nonvanishing = !t.is_zero();
    target_note = "normal form " + t.to_string();
  }
  out.push_back({"nonvanishing", nonvanishing,
                 detail::wname(n) + "(X) + " + detail::wname(n - 1) + "(X)*c != 0", target_note});

  const FacetSet e_y = even_facets(in.y);
  out.push_back({"orientable_Y", e_y.empty(), "E(Y) is empty (every color of Y has odd weight)",
                 std::to_string(e_y.size()) + " even-weight colors"});
  return out;
}

inline std::vector<std::string> required_facts(ClassMode mode) {
  std::vector<std::string> out{"small_cover_X", "proper_Y", "connected_Y", "matching", "induced_X", "normal_bundle"};
  if (mode == ClassMode::kW1) {
    out.push_back("orientable_Y");
  } else {
    out.push_back("nonvanishing");
  }
  return out;
}

// Granted facts and conclusions that follow from the computed facts.
inline std::pair<std::vector<GrantedFact>, std::vector<std::string>> derive_conclusions(
    const std::vector<CertificateFact>& facts, std::size_t n) {
  std::vector<GrantedFact> granted;
  std::vector<std::string> conclusions;
  const std::string wn = detail::wname(n);
  granted.push_back({"each component of the preimage of a facet is the real toric manifold of the induced coloring",
                     "characteristic submanifolds of real toric manifolds"});
  if (detail::fact_holds(facts, "nonvanishing")) {
    granted.push_back({"TY restricted to X is TX + nu, so w(Y) restricts to w(X)(1 + w1(nu)) and " + wn +
                           "(Y) restricts to " + wn + "(X) + " + detail::wname(n - 1) + "(X)*w1(nu)",
                       "Whitney sum formula for a codimension-one submanifold"});
    conclusions.push_back(wn + "(Y) != 0");
    if (n + 1 == 4) {
      granted.push_back({"on a closed 4-manifold the Wu classes give w3 = Sq1 w2, the mod-2 reduction of W3",
                         "Wu formula"});
      granted.push_back({"a manifold admits a pin^c structure iff W3 = 0", "integral Bockstein of w2"});
      conclusions.push_back("W3(Y) != 0");
      conclusions.push_back("Y is not pin^c");
    }
  }
  if (detail::fact_holds(facts, "orientable_Y")) {
    granted.push_back({"w1 of a real toric manifold is the sum of the hypersurfaces over facets with even-weight colors",
                       "orientability criterion for real toric manifolds"});
    conclusions.push_back("Y is orientable");
    if (detail::fact_holds(facts, "nonvanishing") && n + 1 == 4) conclusions.push_back("Y is not spin^c");
  }
  return {granted, conclusions};
}

struct Certificate {
  CertificateInputs inputs;
  std::vector<CertificateFact> facts;
  std::vector<GrantedFact> granted;
  std::vector<std::string> conclusions;
};

// Evaluates the facts and refuses to certify unless every required fact holds.
inline Certificate build_certificate(CertificateInputs inputs) {
  Certificate cert;
  cert.facts = evaluate_facts(inputs);
  std::vector<std::string> failing;
  for (const auto& id : required_facts(inputs.mode)) {
    for (const auto& f : cert.facts) {
      if (f.id == id && !f.value) failing.push_back(f.statement);
    }
  }
  if (!failing.empty()) {
    std::string msg = "certificate aborted, required fact fails:";
    for (const auto& s : failing) msg += " [" + s + "]";
    throw CertificateError(msg);
  }
  std::tie(cert.granted, cert.conclusions) =
      derive_conclusions(cert.facts, static_cast<std::size_t>(inputs.base->dim()));
  cert.inputs = std::move(inputs);
  return cert;
}

inline std::string serialize(const Certificate& cert) {
  const auto& in = cert.inputs;
  std::ostringstream os;
  os << kCertificateMagic << "\n";
  os << "INPUT base_scheme " << in.base_ref << " " << scheme_digest(*in.base) << "\n";
  os << "INPUT ambient_scheme " << in.ambient_ref << " " << scheme_digest(*in.ambient) << "\n";
  os << "INPUT seed " << in.seed << "\n";
  os << "INPUT class_mode " << to_string(in.mode) << "\n";
  os << "INPUT c " << in.c.to_string() << "\n";
  os << "INPUT facet_q " << in.facet_q << "\n";
  os << "INPUT matching " << detail::join_ints(in.matching) << "\n";
  os << "INPUT base_canonical " << detail::join_colors(canonical_form(in.x).colors()) << "\n";
  os << "INPUT base_coloring\n";
  write_coloring(os, in.x);
  os << "INPUT ambient_coloring\n";
  write_coloring(os, in.y);
  os << "COMPUTED\n";
  for (const auto& f : cert.facts) os << f.line() << "\n";
  os << "GRANTED\n";
  for (const auto& g : cert.granted) os << g.line() << "\n";
  os << "CONCLUSION\n";
  for (const auto& c : cert.conclusions) os << c << "\n";
  std::string body = os.str();
  return body + "CHECKSUM sha256 " + sha256_hex(body) + "\n";
}

struct ReplayReport {
  bool ok = false;
  std::vector<std::string> failures;
  std::vector<std::string> conclusions;
};

using SchemeResolver = std::function<RightAngledScheme(const std::string&)>;

// Re-derives everything from the recorded inputs and reports every mismatch.
inline ReplayReport replay(const std::string& text, const SchemeResolver& resolve = resolve_scheme) {
  ReplayReport report;
  auto fail = [&](std::string msg) { report.failures.push_back(std::move(msg)); };

  const std::string marker = "CHECKSUM sha256 ";
  const auto pos = text.rfind(marker);
  if (pos == std::string::npos || (pos != 0 && text[pos - 1] != '\n')) {
    fail("malformed certificate: no checksum line");
    return report;
  }
  std::string recorded_sum = text.substr(pos + marker.size());
  while (!recorded_sum.empty() && (recorded_sum.back() == '\n' || recorded_sum.back() == '\r')) recorded_sum.pop_back();
  const std::string body = text.substr(0, pos);
  if (sha256_hex(body) != recorded_sum) fail("checksum mismatch");

  // Split into sections.
  std::istringstream lines(body);
  std::string line;
  if (!std::getline(lines, line) || line != kCertificateMagic) {
    fail("malformed certificate: bad header");
    return report;
  }
  std::map<std::string, std::string> fields;
  std::string base_block, ambient_block;
  std::vector<std::string> fact_lines, grant_lines, conclusion_lines;
  std::string* block = nullptr;
  std::string section = "INPUT";
  while (std::getline(lines, line)) {
    if (line == "COMPUTED" || line == "GRANTED" || line == "CONCLUSION") {
      section = line;
      block = nullptr;
      continue;
    }
    if (section == "COMPUTED") {
      fact_lines.push_back(line);
    } else if (section == "GRANTED") {
      grant_lines.push_back(line);
    } else if (section == "CONCLUSION") {
      conclusion_lines.push_back(line);
    } else if (line.rfind("INPUT ", 0) == 0) {
      const std::string rest = line.substr(6);
      const auto sp = rest.find(' ');
      const std::string key = rest.substr(0, sp);
      if (key == "base_coloring") {
        block = &base_block;
      } else if (key == "ambient_coloring") {
        block = &ambient_block;
      } else {
        block = nullptr;
        fields[key] = sp == std::string::npos ? "" : rest.substr(sp + 1);
      }
    } else if (block) {
      *block += line + "\n";
    } else {
      fail("malformed certificate: stray line '" + line + "'");
      return report;
    }
  }

  CertificateInputs in;
  auto field = [&](const std::string& key) -> std::string {
    auto it = fields.find(key);
    if (it == fields.end()) throw ParseError("missing INPUT " + key);
    return it->second;
  };
  auto load = [&](const std::string& key, std::string& ref) -> SchemePtr {
    std::istringstream f(field(key));
    std::string digest;
    if (!(f >> ref >> digest)) throw ParseError("INPUT " + key + " needs a reference and a digest");
    SchemePtr s = share(resolve(ref));
    const std::string found = scheme_digest(*s);
    if (found != digest) fail("input-digest mismatch for " + key + " " + ref + ": recorded " + digest + ", found " + found);
    return s;
  };
  try {
    in.base = load("base_scheme", in.base_ref);
    in.ambient = load("ambient_scheme", in.ambient_ref);
    in.seed = std::stoull(field("seed"));
    in.mode = parse_class_mode(field("class_mode"));
    in.c = BitVector::from_string(field("c"));
    in.facet_q = std::stoi(field("facet_q"));
    std::istringstream m(field("matching"));
    for (int v; m >> v;) in.matching.push_back(v);
    in.x = coloring_from_string(base_block, in.base);
    in.y = coloring_from_string(ambient_block, in.ambient);
    if (field("base_canonical") != detail::join_colors(canonical_form(in.x).colors())) {
      fail("recorded canonical form of X does not match the base coloring");
    }
  } catch (const std::exception& e) {
    fail(std::string("malformed certificate inputs: ") + e.what());
    return report;
  }

  std::vector<CertificateFact> facts;
  try {
    facts = evaluate_facts(in);
  } catch (const std::exception& e) {
    fail(std::string("fact evaluation failed: ") + e.what());
    return report;
  }

  std::map<std::string, std::string> recorded;
  for (const auto& l : fact_lines) {
    std::istringstream f(l);
    std::string tag, id;
    if (!(f >> tag >> id) || tag != "FACT") {
      fail("malformed fact line '" + l + "'");
      continue;
    }
    recorded[id] = l;
  }
  for (const auto& f : facts) {
    auto it = recorded.find(f.id);
    if (it == recorded.end()) {
      fail("fact '" + f.statement + "' is missing");
      continue;
    }
    if (it->second != f.line()) {
      const bool recorded_true = it->second.rfind("FACT " + f.id + " true", 0) == 0;
      if (recorded_true != f.value) {
        fail("fact '" + f.statement + "' recorded " + (recorded_true ? "true" : "false") + " but recomputes " +
             (f.value ? "true" : "false"));
      } else {
        fail("fact '" + f.statement + "' recorded as '" + it->second + "'");
      }
    }
    recorded.erase(it);
  }
  for (const auto& [id, l] : recorded) fail("unknown fact '" + id + "'");

  for (const auto& id : required_facts(in.mode)) {
    if (!detail::fact_holds(facts, id)) {
      for (const auto& f : facts) {
        if (f.id == id) fail("required fact fails: " + f.statement);
      }
    }
  }

  const auto [granted, conclusions] = derive_conclusions(facts, static_cast<std::size_t>(in.base->dim()));
  std::vector<std::string> expected_grants;
  for (const auto& g : granted) expected_grants.push_back(g.line());
  if (grant_lines != expected_grants) fail("granted facts differ from those the computed facts support");
  if (conclusion_lines != conclusions) fail("conclusions differ from those the computed facts support");

  report.conclusions = conclusion_lines;
  report.ok = report.failures.empty();
  return report;
}

}  // namespace smallcover
