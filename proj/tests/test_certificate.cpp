#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "support.hpp"

using namespace smallcover;

namespace {

CertificateInputs inputs_for(const Coloring& x, const HypersurfaceClassVector& c, ClassMode mode) {
  CertificateInputs in;
  in.base_ref = "dodecahedron";
  in.base = sctest::dodecahedron();
  in.ambient_ref = "c120";
  static const SchemePtr c120 = share(c120_scheme());
  in.ambient = c120;
  in.x = x;
  in.c = c;
  in.mode = mode;
  in.facet_q = 1;
  in.matching = *find_matching(*in.base, *in.ambient, 1);
  in.y = extend_with_class(x, c, in.ambient, 1, in.matching);
  return in;
}

const Coloring& first_w2_nonzero() {
  for (const auto& cls : sctest::dodecahedral_classes()) {
    if (!total_sw(cls.representative).w[2].is_zero()) return cls.representative;
  }
  throw std::logic_error("no class with w2 != 0");
}

std::string auto_certificate() {
  const Coloring& x = first_w2_nonzero();
  return serialize(build_certificate(inputs_for(x, find_dual_class(x).c, ClassMode::kAuto)));
}

bool mentions(const ReplayReport& r, const std::string& needle) {
  for (const auto& f : r.failures) {
    if (f.find(needle) != std::string::npos) return true;
  }
  return false;
}

}  // namespace

TEST(Certificate, AutoClassConcludesNotPinc) {
  const std::string text = auto_certificate();
  const ReplayReport r = replay(text);
  EXPECT_TRUE(r.ok);
  EXPECT_TRUE(r.failures.empty());
  EXPECT_NE(std::find(r.conclusions.begin(), r.conclusions.end(), "Y is not pin^c"), r.conclusions.end());
  EXPECT_NE(text.find("COMPUTED\n"), std::string::npos);
  EXPECT_NE(text.find("GRANTED\n"), std::string::npos);
  EXPECT_NE(text.find("CONCLUSION\n"), std::string::npos);
}

TEST(Certificate, SerializationIsDeterministic) { EXPECT_EQ(auto_certificate(), auto_certificate()); }

TEST(Certificate, ZeroClassAborts) {
  const Coloring& x = first_w2_nonzero();
  try {
    build_certificate(inputs_for(x, HypersurfaceClassVector(12), ClassMode::kExplicit));
    FAIL() << "expected abort";
  } catch (const CertificateError& e) {
    EXPECT_NE(std::string(e.what()).find("w3(X) + w2(X)*c != 0"), std::string::npos) << e.what();
  }
}

TEST(Certificate, W1ModeRecordsOrientability) {
  for (const auto& cls : sctest::dodecahedral_classes()) {
    const Coloring& x = cls.representative;
    const Certificate cert = build_certificate(inputs_for(x, w1_hypersurface(x).coefficients, ClassMode::kW1));
    const auto& c = cert.conclusions;
    EXPECT_NE(std::find(c.begin(), c.end(), "Y is orientable"), c.end());
    // w3 + w2 w1 = w1^3 vanishes on a closed 3-manifold, so no pin^c conclusion.
    EXPECT_EQ(std::find(c.begin(), c.end(), "Y is not pin^c"), c.end());
    EXPECT_TRUE(replay(serialize(cert)).ok);
  }
}

TEST(CertificateTamper, FlippedClassBitNamesTheFailingFact) {
  const std::string text = auto_certificate();
  const auto line = text.find("INPUT c ");
  ASSERT_NE(line, std::string::npos);
  std::string tampered = text;
  const auto one = tampered.find('1', line + 8);
  tampered[one] = '0';
  const ReplayReport r = replay(tampered);
  EXPECT_FALSE(r.ok);
  EXPECT_TRUE(mentions(r, "w3(X) + w2(X)*c != 0"));
  EXPECT_TRUE(mentions(r, "checksum mismatch"));
}

TEST(CertificateTamper, EveryRandomByteFlipIsCaught) {
  const std::string text = auto_certificate();
  auto rng = sctest::make_rng(14);
  for (int trial = 0; trial < 25; ++trial) {
    std::string tampered = text;
    const std::size_t pos = rng() % tampered.size();
    tampered[pos] = static_cast<char>(tampered[pos] ^ (1 << (rng() % 7)));
    EXPECT_FALSE(replay(tampered).ok) << "byte " << pos;
  }
}

TEST(CertificateTamper, ConsistentRewriteOfAFactIsCaught) {
  // Recomputing the checksum does not help once a fact line lies.
  const std::string text = auto_certificate();
  std::string body = text.substr(0, text.rfind("CHECKSUM"));
  const auto pos = body.find("FACT orientable_Y false");
  ASSERT_NE(pos, std::string::npos);
  body.replace(pos, 23, "FACT orientable_Y true ");
  const ReplayReport r = replay(body + "CHECKSUM sha256 " + sha256_hex(body) + "\n");
  EXPECT_FALSE(r.ok);
  EXPECT_FALSE(mentions(r, "checksum"));
}

TEST(CertificateTamper, DifferentSchemeDigest) {
  const auto dir = std::filesystem::temp_directory_path() / "smallcover-cert-test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "base.scheme").string();
  { std::ofstream(path) << dodecahedron_scheme().serialize(); }

  const Coloring& x = first_w2_nonzero();
  CertificateInputs in = inputs_for(x, find_dual_class(x).c, ClassMode::kAuto);
  in.base_ref = path;
  const std::string text = serialize(build_certificate(in));
  EXPECT_TRUE(replay(text).ok);

  std::vector<int> swap(12);
  std::iota(swap.begin(), swap.end(), 1);
  std::swap(swap[0], swap[11]);
  { std::ofstream(path) << dodecahedron_scheme().relabeled(swap).serialize(); }
  const ReplayReport r = replay(text);
  EXPECT_FALSE(r.ok);
  EXPECT_TRUE(mentions(r, "input-digest mismatch"));
  std::filesystem::remove_all(dir);
}

TEST(CertificateTamper, Truncated) {
  const std::string text = auto_certificate();
  EXPECT_FALSE(replay(text.substr(0, text.size() / 2)).ok);
  EXPECT_FALSE(replay("").ok);
}
