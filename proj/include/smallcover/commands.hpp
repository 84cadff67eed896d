#pragma once

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "smallcover/smallcover.hpp"

namespace smallcover::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

struct CommonOptions {
  std::uint64_t seed = 0;
  unsigned threads = 1;
  bool allow_large = false;
};

// Header (command, version, seed, input digests, duration), `---`, payload.
class ResultSet {
 public:
  ResultSet(std::string command, const CommonOptions& opts) : command_(std::move(command)), seed_(opts.seed) {}

  void add_input(const std::string& ref, const std::string& digest) { inputs_.push_back(ref + " sha256 " + digest); }
  std::ostream& payload() { return payload_; }

  void write(std::ostream& os) const {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_);
    os << "# smallcover " << kVersion << "\n";
    os << "# command " << command_ << "\n";
    os << "# seed " << seed_ << "\n";
    for (const auto& in : inputs_) os << "# input " << in << "\n";
    os << "# duration_ms " << ms.count() << "\n";
    os << "---\n" << payload_.str();
  }

 private:
  std::string command_;
  std::uint64_t seed_;
  std::vector<std::string> inputs_;
  std::ostringstream payload_;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline SchemePtr load_input_scheme(const std::string& ref, ResultSet& rs) {
  SchemePtr s = share(resolve_scheme(ref));
  rs.add_input(ref, scheme_digest(*s));
  return s;
}

inline int cmd_validate(const std::string& ref, const CommonOptions& opts, std::ostream& out, std::ostream& err) {
  ResultSet rs("validate " + ref, opts);
  SchemePtr s;
  try {
    s = load_input_scheme(ref, rs);
  } catch (const ValidationError& e) {
    err << "invalid scheme: " << e.what() << "\n";
    return kFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  auto& p = rs.payload();
  p << "valid dim " << s->dim() << " facets " << s->num_facets() << " vertices " << s->num_vertices() << "\n";
  p << "face_counts";
  for (auto f : s->face_counts()) p << " " << f;
  p << "\nh_vector";
  for (auto h : h_vector(*s)) p << " " << h;
  p << "\nadjacency_degrees";
  for (auto d : s->adjacency_degrees()) p << " " << d;
  p << "\n";
  rs.write(out);
  return kOk;
}

inline std::vector<ColoringClass> run_enumeration(const SchemePtr& s, const CommonOptions& opts) {
  EnumerateOptions eo;
  eo.allow_large = opts.allow_large;
  eo.threads = opts.threads;
  return enumerate_small_covers(s, eo);
}

inline int cmd_enumerate(const std::string& ref, const CommonOptions& opts, std::ostream& out, std::ostream& err) {
  ResultSet rs("enumerate " + ref, opts);
  try {
    const SchemePtr s = load_input_scheme(ref, rs);
    const auto classes = run_enumeration(s, opts);
    write_class_list(rs.payload(), classes);
    rs.payload() << "classes " << classes.size() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  rs.write(out);
  return kOk;
}

// One line per class: w1, w2, w3 and the orientability / w2 / symmetry flags.
inline int cmd_sw_report(const std::string& ref, const std::optional<std::string>& class_file,
                         const CommonOptions& opts, std::ostream& out, std::ostream& err) {
  ResultSet rs("sw-report " + ref, opts);
  try {
    const SchemePtr s = load_input_scheme(ref, rs);
    std::vector<ColoringClass> classes;
    if (class_file) {
      std::ifstream in(*class_file);
      if (!in) throw std::runtime_error("cannot read " + *class_file);
      classes = read_class_list(in, s);
      rs.add_input(*class_file, sha256_hex(read_file(*class_file)));
    } else {
      classes = run_enumeration(s, opts);
    }
    std::size_t nonzero = 0, order3 = 0;
    auto& p = rs.payload();
    for (std::size_t i = 0; i < classes.size(); ++i) {
      const SWData sw = total_sw(classes[i].representative);
      const bool w2_nonzero = sw.w.size() > 2 && !sw.w[2].is_zero();
      nonzero += w2_nonzero;
      order3 += classes[i].has_order3_symmetry;
      p << "class " << (i + 1);
      for (std::size_t d = 1; d < sw.w.size(); ++d) p << " w" << d << " " << sw.w[d].to_string();
      p << " orientable " << (sw.orientable ? "true" : "false") << " w2_nonzero " << (w2_nonzero ? "true" : "false")
        << " order3_stab " << (classes[i].has_order3_symmetry ? "true" : "false") << "\n";
    }
    p << "w2_nonzero: " << nonzero << " / " << classes.size() << "\n";
    p << "order3_stab: " << order3 << " / " << classes.size() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  rs.write(out);
  return kOk;
}

struct Build4dOptions {
  std::string base = "dodecahedron";
  std::string ambient = "c120";
  std::optional<std::size_t> class_ordinal;
  std::optional<std::string> coloring_file;
  std::string c = "auto";  // auto, w1, or a facet bitstring
  int facet_q = 1;
  std::string cert_path;
};

// Parses --c: auto, w1, or a bitstring with one bit per base facet.
inline bool valid_class_spec(const std::string& c) {
  if (c == "auto" || c == "w1") return true;
  if (c.empty()) return false;
  return c.find_first_not_of("01") == std::string::npos;
}

inline int cmd_build4d(const Build4dOptions& b, const CommonOptions& opts, std::ostream& out, std::ostream& err) {
  if (!valid_class_spec(b.c)) {
    err << "usage: --c must be auto, w1, or a bitstring\n";
    return kUsage;
  }
  if (b.class_ordinal.has_value() == b.coloring_file.has_value()) {
    err << "usage: give exactly one of --class and --coloring\n";
    return kUsage;
  }
  ResultSet rs("build4d " + b.base + " " + b.ambient + " --c " + b.c + " --facet-q " + std::to_string(b.facet_q), opts);
  try {
    CertificateInputs in;
    in.base_ref = b.base;
    in.base = load_input_scheme(b.base, rs);
    in.ambient_ref = b.ambient;
    in.ambient = load_input_scheme(b.ambient, rs);
    in.seed = opts.seed;
    in.facet_q = b.facet_q;
    in.ambient->check_facet(b.facet_q);

    if (b.class_ordinal) {
      const auto classes = run_enumeration(in.base, opts);
      if (*b.class_ordinal < 1 || *b.class_ordinal > classes.size()) {
        err << "usage: --class must be in 1.." << classes.size() << "\n";
        return kUsage;
      }
      in.x = classes[*b.class_ordinal - 1].representative;
    } else {
      in.x = coloring_from_string(read_file(*b.coloring_file), in.base);
      rs.add_input(*b.coloring_file, sha256_hex(read_file(*b.coloring_file)));
    }

    if (b.c == "auto") {
      in.mode = ClassMode::kAuto;
      in.c = find_dual_class(in.x).c;
    } else if (b.c == "w1") {
      in.mode = ClassMode::kW1;
      in.c = w1_hypersurface(in.x).coefficients;
    } else {
      in.mode = ClassMode::kExplicit;
      in.c = BitVector::from_string(b.c);
      if (in.c.size() != in.x.num_facets()) {
        err << "usage: --c needs " << in.x.num_facets() << " bits\n";
        return kUsage;
      }
    }

    const auto matching = find_matching(*in.base, *in.ambient, b.facet_q);
    if (!matching) throw std::runtime_error("facet " + std::to_string(b.facet_q) + " of the ambient scheme is not isomorphic to the base");
    in.matching = *matching;
    in.y = extend_with_class(in.x, in.c, in.ambient, in.facet_q, in.matching);

    const Certificate cert = build_certificate(std::move(in));
    const std::string text = serialize(cert);
    std::ofstream cf(b.cert_path, std::ios::binary);
    if (!cf || !(cf << text)) throw std::runtime_error("cannot write " + b.cert_path);

    auto& p = rs.payload();
    p << "c " << cert.inputs.c.to_string() << "\n";
    p << "facet_q " << cert.inputs.facet_q << "\n";
    p << "ambient_m " << cert.inputs.y.m() << "\n";
    for (const auto& f : cert.facts) p << f.id << " " << (f.value ? "true" : "false") << "\n";
    for (const auto& c : cert.conclusions) p << "conclusion " << c << "\n";
    p << "certificate " << b.cert_path << " sha256 " << sha256_hex(text) << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  rs.write(out);
  return kOk;
}

inline int cmd_replay(const std::string& path, const CommonOptions& opts, std::ostream& out, std::ostream& err) {
  ResultSet rs("replay " + path, opts);
  std::string text;
  try {
    text = read_file(path);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  rs.add_input(path, sha256_hex(text));
  const ReplayReport report = replay(text);
  auto& p = rs.payload();
  for (const auto& f : report.failures) p << "FAIL " << f << "\n";
  for (const auto& c : report.conclusions) p << "conclusion " << c << "\n";
  p << "replay " << (report.ok ? "ok" : "failed") << "\n";
  rs.write(out);
  for (const auto& f : report.failures) err << "replay: " << f << "\n";
  return report.ok ? kOk : kFailure;
}

// Writes the generated 120-cell scheme; with `check`, compares it against the
// bundled data up to facet relabeling instead.
inline int cmd_gen120(bool check, const CommonOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    const RightAngledScheme generated = generate_120cell();
    if (!check) {
      out << "# 120-cell: facets are dodecahedra, vertices are the 600 points of the standard coordinates\n";
      out << generated.serialize();
      return kOk;
    }
    ResultSet rs("gen120 --check", opts);
    const SchemePtr bundled = load_input_scheme("c120", rs);
    const bool same = find_isomorphism(generated, *bundled).has_value();
    rs.payload() << "generated_digest " << scheme_digest(generated) << "\n";
    rs.payload() << "isomorphic_to_bundled " << (same ? "true" : "false") << "\n";
    rs.write(out);
    return same ? kOk : kFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace smallcover::cli
