#include <gtest/gtest.h>

#include "lqres/io.hpp"
#include "support.hpp"

using namespace support;

namespace {

const char* kPlain = R"(# three quadrics
field: QQ
variables: x, y, z
generators: x^2, x*y,
  y^2
order: 3 1 2
certificate:
  2: y
  3: x
)";

}  // namespace

TEST(ParseIdeal, PlainText) {
  auto raw = parse_ideal_file(kPlain);
  EXPECT_EQ(raw.field, "QQ");
  EXPECT_EQ(raw.variables, (std::vector<std::string>{"x", "y", "z"}));
  EXPECT_EQ(raw.generators, (std::vector<std::string>{"x^2", "x*y", "y^2"}));
  ASSERT_TRUE(raw.order);
  EXPECT_EQ(*raw.order, (std::vector<std::size_t>{3, 1, 2}));
  EXPECT_EQ(raw.certificate.at(2), std::vector<std::string>{"y"});
  auto in = instantiate<Q>(raw);
  EXPECT_EQ(in.ideal.size(), 3u);
  EXPECT_EQ(*in.order, (std::vector<std::size_t>{2, 0, 1}));
  EXPECT_EQ(in.certificate->size(), 3u);
}

TEST(ParseIdeal, JsonWithRingBlockOrTopLevel) {
  auto a = parse_ideal_file(R"({"ring": {"field": 101, "variables": ["a", "b"]}, "generators": ["a*b"]})");
  EXPECT_EQ(a.field, "101");
  EXPECT_EQ(a.variables.size(), 2u);
  auto b = parse_ideal_file(R"(  {"field": "QQ", "variables": ["a"], "generators": ["a"], "order": [1]})");
  EXPECT_EQ(b.field, "QQ");
  ASSERT_TRUE(b.order);
}

TEST(ParseIdeal, Errors) {
  EXPECT_THROW(parse_ideal_file("generators: x\n"), ParseError);
  EXPECT_THROW(parse_ideal_file("variables: x\n"), ParseError);
  EXPECT_THROW(parse_ideal_file("variables: x\ncolour: red\ngenerators: x\n"), ParseError);
  EXPECT_THROW(parse_ideal_file("variables x\n"), ParseError);
  EXPECT_THROW(parse_ideal_file("  x\n"), ParseError);
  EXPECT_THROW(parse_ideal_file("variables: x\ngenerators: x\norder: a\n"), ParseError);
  EXPECT_THROW(parse_ideal_file("{\"variables\": [\"x\"], "), ParseError);
  EXPECT_THROW(parse_ideal_file(R"({"variables": ["x"]})"), ParseError);
  EXPECT_THROW(instantiate<Q>(parse_ideal_file("variables: x\ngenerators: y\n")), ParseError);
  EXPECT_THROW(instantiate<Q>(parse_ideal_file("variables: x, x\ngenerators: x\n")), ParseError);
  EXPECT_THROW(instantiate<Q>(parse_ideal_file("variables: x\ngenerators: x\norder: 2\n")), ParseError);
  EXPECT_THROW(instantiate<Q>(parse_ideal_file("variables: x, y\ngenerators: x, y\norder: 1 1\n")), ParseError);
  EXPECT_THROW(instantiate<Q>(parse_ideal_file("variables: x, y\ngenerators: x, y\ncertificate:\n  3: x\n")),
               ParseError);
  EXPECT_THROW(instantiate<Q>(parse_ideal_file("variables: x, y\ngenerators: x^2, y\n")), PresentationError);
}

TEST(ParseIdeal, CertificateFromFileIsChecked) {
  auto in = instantiate<Q>(parse_ideal_file(
      R"({"field": "QQ", "variables": ["x", "y"], "generators": ["x^2", "x*y", "y^2"], "certificate": {"2": ["x"], "3": ["x"]}})"));
  auto ok = verify_certificate(in.ideal, *in.certificate);
  ASSERT_TRUE(std::holds_alternative<ColonCertificate<Q>>(ok));
  EXPECT_EQ(std::get<ColonCertificate<Q>>(ok).q_values, (std::vector<std::size_t>{0, 1, 1}));

  auto wrong = instantiate<Q>(parse_ideal_file(
      R"({"field": "QQ", "variables": ["x", "y"], "generators": ["x^2", "x*y", "y^2"], "certificate": {"2": ["x"], "3": ["y"]}})"));
  auto bad = verify_certificate(wrong.ideal, *wrong.certificate);
  ASSERT_TRUE(std::holds_alternative<CertificationFailure>(bad));
  EXPECT_EQ(std::get<CertificationFailure>(bad).k, 3u);
}

TEST(WriteIdeal, RoundTrip) {
  auto I = ideal<Q>({"x", "y", "z"}, {"x*y - 1/2*z^2", "y^2", "x*z"});
  auto text = write_ideal_text(I, std::vector<std::size_t>{1, 0, 2});
  auto back = instantiate<Q>(parse_ideal_file(text));
  EXPECT_EQ(back.ideal.generators(), I.generators());
  EXPECT_EQ(*back.order, (std::vector<std::size_t>{1, 0, 2}));
  auto G = ideal<PrimeField<101>>({"a", "b"}, {"a^2 + 100*b^2"});
  EXPECT_EQ(parse_ideal_file(write_ideal_text(G)).field, "101");
}

TEST(ResolutionJson, RoundTripVerifies) {
  for (auto I : {power_ideal<Q>(3, 2), squarefree_veronese<Q>(4, 2),
                 ideal<Q>({"x", "y", "z"}, {"x + y", "y - 2*z"})}) {
    auto cert = std::get<ColonCertificate<Q>>(certify_linear_quotients(I));
    auto res = build_resolution(I, cert);
    auto j = resolution_to_json(res, I.ring());
    EXPECT_EQ(resolution_field(j), "QQ");
    auto imported = resolution_from_json<Q>(json::parse(j.dump()));
    EXPECT_EQ(imported.ring.names(), I.ring().names());
    EXPECT_EQ(betti_from_resolution(imported.resolution), betti_from_resolution(res));
    EXPECT_TRUE(verify_resolution(imported.resolution, I, &cert).all_passed());
  }
}

TEST(ResolutionJson, CorruptionReachesCheckers) {
  auto I = power_ideal<Q>(2, 2);
  auto cert = std::get<ColonCertificate<Q>>(certify_linear_quotients(I));
  auto j = resolution_to_json(build_resolution(I, cert), I.ring());
  auto& entry = j["differentials"][0][0][2];
  auto s = entry.get<std::string>();
  entry = s.front() == '-' ? s.substr(1) : "-" + s;
  auto imported = resolution_from_json<Q>(j);
  auto report = verify_resolution(imported.resolution, I, &cert);
  EXPECT_FALSE(report.all_passed());
  EXPECT_EQ(report.first_failure()->name, "complex");
}

TEST(ResolutionJson, Errors) {
  EXPECT_THROW(resolution_from_json<Q>(json{{"format", "other"}}), ParseError);
  EXPECT_THROW(resolution_from_json<Q>(json{{"format", "lqres-resolution"}}), ParseError);
  EXPECT_THROW(resolution_field(json::object()), ParseError);
  auto I = power_ideal<Q>(2, 1);
  auto cert = std::get<ColonCertificate<Q>>(certify_linear_quotients(I));
  auto j = resolution_to_json(build_resolution(I, cert), I.ring());
  auto out_of_range = j;
  out_of_range["differentials"][0][0][0] = 7;
  EXPECT_THROW(resolution_from_json<Q>(out_of_range), ParseError);
  auto inhomogeneous = j;
  inhomogeneous["differentials"][0][0][2] = "x1 + x2^2";
  EXPECT_THROW(resolution_from_json<Q>(inhomogeneous), ParseError);
  auto short_aug = j;
  short_aug["augmentation"] = json::array({"x1"});
  EXPECT_THROW(resolution_from_json<Q>(short_aug), ParseError);
}

TEST(Manifest, ParseAndExpand) {
  auto recs = parse_manifest(R"({"records": [
    {"family": "power", "n": 3, "d": 2},
    {"family": "veronese", "n": 4, "d": 2, "name": "v42"},
    {"family": "alexander_dual", "vertices": 3, "facets": [[1, 2], [2, 3]], "shelling": [2, 1]},
    {"family": "random_lq", "n": 4, "d": 2, "m": 5, "seed": 7},
    {"family": "linear_substitution", "n": 3, "d": 2}
  ]})");
  ASSERT_EQ(recs.size(), 5u);
  EXPECT_EQ(recs[2].complex.vertices, 3u);
  EXPECT_EQ(recs[2].complex.facets[1], (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(*recs[2].complex.shelling, (std::vector<std::size_t>{1, 0}));

  auto power = expand_record<Q>(recs[0], 0);
  ASSERT_TRUE(power);
  EXPECT_EQ(power->name, "power_3_2");
  EXPECT_EQ(power->ideal.size(), 6u);
  EXPECT_EQ(expand_record<Q>(recs[1], 0)->name, "v42");
  EXPECT_EQ(expand_record<Q>(recs[2], 0)->ideal.size(), 2u);
  auto lq = expand_record<Q>(recs[3], 0);
  ASSERT_TRUE(lq);
  EXPECT_TRUE(std::holds_alternative<ColonCertificate<Q>>(certify_linear_quotients(lq->ideal)));
  auto a = expand_record<Q>(recs[4], 11), b = expand_record<Q>(recs[4], 11), c = expand_record<Q>(recs[4], 12);
  EXPECT_EQ(a->ideal.generators(), b->ideal.generators());
  EXPECT_NE(a->ideal.generators(), c->ideal.generators());
}

TEST(Manifest, Errors) {
  EXPECT_THROW(parse_manifest("not json"), ParseError);
  EXPECT_THROW(parse_manifest(R"([{"n": 2}])"), ParseError);
  EXPECT_THROW(parse_manifest(R"([{"family": "alexander_dual", "vertices": 2, "facets": [[0, 1]]}])"), ParseError);
  auto recs = parse_manifest(R"([{"family": "mystery", "n": 2, "d": 2}])");
  EXPECT_THROW(expand_record<Q>(recs[0], 0), ParseError);
}

TEST(ReportJson, Fields) {
  auto I = power_ideal<Q>(2, 2);
  auto cert = std::get<ColonCertificate<Q>>(certify_linear_quotients(I));
  auto j = report_to_json(verify_resolution(build_resolution(I, cert), I, &cert));
  EXPECT_TRUE(j["all_passed"].get<bool>());
  EXPECT_EQ(j["exactness_basis"], "exact");
  auto b = betti_to_json(betti_from_q(cert.q_values, 2));
  EXPECT_EQ(b["totals"], json::array({3, 2}));
}
