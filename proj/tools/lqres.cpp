// Command-line front end: certification, construction, verification and
// corpus generation for ideals with linear quotients.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "lqres/lqres.hpp"

namespace {

using namespace lqres;

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kCertification = 3,
  kConstruction = 4,
  kVerification = 5,
};

struct RunConfig {
  std::string command;
  std::string input;
  std::string ideal;  // second input of `verify`
  std::string field;  // overrides the file when non-empty
  std::string order_mode = "given";
  std::string out;
  std::string report;
  std::uint64_t seed = 1;
  std::optional<int> emax;
  bool bruteforce = false;
  bool degreewise = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << text;
}

// Calls fn.template operator()<F>() for the field named on the command line
// or in the input file.
template <typename Fn>
int with_field(const std::string& name, Fn&& fn) {
  if (name == "QQ" || name == "Q" || name == "rationals") return fn.template operator()<Rational>();
  if (name == "3") return fn.template operator()<PrimeField<3>>();
  if (name == "5") return fn.template operator()<PrimeField<5>>();
  if (name == "7") return fn.template operator()<PrimeField<7>>();
  if (name == "11") return fn.template operator()<PrimeField<11>>();
  if (name == "101") return fn.template operator()<PrimeField<101>>();
  if (name == "32003") return fn.template operator()<PrimeField<32003>>();
  if (name == "65521") return fn.template operator()<PrimeField<65521>>();
  if (name == "2147483647") return fn.template operator()<PrimeField<2147483647>>();
  throw ParseError("unsupported field '" + name + "' (use QQ or one of 3 5 7 11 101 32003 65521 2147483647)");
}

std::optional<SearchMode> search_mode(const std::string& mode) {
  if (mode == "exhaustive") return SearchMode::exhaustive;
  if (mode == "greedy") return SearchMode::greedy;
  if (mode == "auto") return SearchMode::automatic;
  return std::nullopt;
}

template <ExactField F>
std::string join_polys(const Ring& ring, const std::vector<Polynomial<F>>& ps) {
  std::string s;
  for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? ", " : "") + ring.format(ps[i]);
  return s;
}

template <ExactField F>
void print_certificate(std::ostream& os, const IdealPresentation<F>& ideal, const ColonCertificate<F>& cert) {
  os << "order: " << join_polys(ideal.ring(), ideal.generators()) << '\n';
  for (std::size_t k = 1; k < cert.forms.size(); ++k)
    os << "  k=" << k + 1 << "  q=" << cert.q_values[k] << "  L = <" << join_polys(ideal.ring(), cert.forms[k]) << ">\n";
  os << "q = (";
  for (std::size_t k = 0; k < cert.q_values.size(); ++k) os << (k ? ", " : "") << cert.q_values[k];
  os << "), q(I) = " << cert.q_max << '\n';
  os << "certificate: " << (cert.definitive ? "definitive" : "provisional (degree-one part of each colon only)") << '\n';
}

void print_failure(std::ostream& os, const Ring& ring, const CertificationFailure& f) {
  os << "no linear quotients: fails at k=" << f.k << ": " << f.reason;
  if (!f.offending.empty()) {
    os << " [";
    for (std::size_t i = 0; i < f.offending.size(); ++i) os << (i ? ", " : "") << ring.format(f.offending[i]);
    os << "]";
  }
  os << '\n';
}

template <ExactField F>
struct Certified {
  IdealPresentation<F> ideal;  // in the certified order
  ColonCertificate<F> cert;
};

// Resolves the ordering per --order-mode and certifies it. Prints and returns
// nullopt on failure.
template <ExactField F>
std::optional<Certified<F>> certify_input(const IdealInput<F>& input, const RunConfig& cfg) {
  const auto& ring = input.ideal.ring();
  if (auto mode = search_mode(cfg.order_mode)) {
    auto search = find_lq_order(input.ideal, *mode);
    if (!search.found()) {
      std::cout << "no linear-quotients order found (" << (search.exhaustive ? "exhaustive" : "greedy") << " search, "
                << (search.definitive ? "definitive" : "inconclusive") << "; longest certified prefix "
                << search.deepest_prefix << ")\n";
      auto direct = certify_linear_quotients(input.ideal);
      if (auto* f = std::get_if<CertificationFailure>(&direct)) print_failure(std::cout, ring, *f);
      return std::nullopt;
    }
    return Certified<F>{input.ideal.reordered(*search.order), *search.certificate};
  }
  if (cfg.order_mode != "given") throw ParseError("unknown order mode '" + cfg.order_mode + "'");
  auto ideal = input.order ? input.ideal.reordered(*input.order) : input.ideal;
  auto result = input.certificate ? verify_certificate(ideal, *input.certificate) : certify_linear_quotients(ideal);
  if (auto* f = std::get_if<CertificationFailure>(&result)) {
    print_failure(std::cout, ring, *f);
    return std::nullopt;
  }
  return Certified<F>{ideal, std::get<ColonCertificate<F>>(result)};
}

void print_report(std::ostream& os, const VerificationReport& report) {
  for (const auto& c : report.checks) {
    os << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) os << "  (" << c.detail << ")";
    os << '\n';
  }
  if (report.exactness_basis.empty()) return;
  os << "exactness: " << report.exactness_basis;
  if (report.exactness_basis == "bounded-degree certificate") os << " up to degree " << report.e_max;
  os << '\n';
}

template <ExactField F>
int cmd_check(const RunConfig& cfg, const RawIdealFile& raw) {
  auto input = instantiate<F>(raw);
  auto certified = certify_input(input, cfg);
  json out;
  if (!certified) {
    auto direct = certify_linear_quotients(input.order ? input.ideal.reordered(*input.order) : input.ideal);
    out = {{"linear_quotients", false}};
    if (auto* f = std::get_if<CertificationFailure>(&direct)) out["failure"] = failure_to_json(*f, input.ideal.ring());
  } else {
    print_certificate(std::cout, certified->ideal, certified->cert);
    out = {{"linear_quotients", true}, {"certificate", certificate_to_json(certified->cert, input.ideal.ring())}};
  }
  if (!cfg.out.empty()) write_file(cfg.out, out.dump(2) + "\n");
  return certified ? kOk : kCertification;
}

template <ExactField F>
int cmd_order(const RunConfig& cfg, const RawIdealFile& raw) {
  auto input = instantiate<F>(raw);
  auto mode = search_mode(cfg.order_mode == "given" ? "auto" : cfg.order_mode);
  if (!mode) throw ParseError("unknown order mode '" + cfg.order_mode + "'");
  auto search = find_lq_order(input.ideal, *mode);
  json out = {{"found", search.found()},
              {"search", search.exhaustive ? "exhaustive" : "greedy"},
              {"definitive", search.definitive}};
  if (search.found()) {
    std::cout << "order (1-based):";
    std::vector<std::size_t> one_based;
    for (auto i : *search.order) one_based.push_back(i + 1);
    for (auto i : one_based) std::cout << ' ' << i;
    std::cout << '\n';
    print_certificate(std::cout, input.ideal.reordered(*search.order), *search.certificate);
    out["order"] = one_based;
    out["certificate"] = certificate_to_json(*search.certificate, input.ideal.ring());
  } else {
    std::cout << "no order with linear quotients (" << (search.definitive ? "definitive" : "inconclusive")
              << ", longest certified prefix " << search.deepest_prefix << ")\n";
  }
  if (!cfg.out.empty()) write_file(cfg.out, out.dump(2) + "\n");
  return search.found() ? kOk : kCertification;
}

template <ExactField F>
int cmd_resolve(const RunConfig& cfg, const RawIdealFile& raw, bool betti_only) {
  auto input = instantiate<F>(raw);
  if (betti_only && cfg.bruteforce) {
    const auto& I = input.ideal;
    int degree_bound = I.is_monomial() ? monomial_degree_bound(I) : cfg.emax.value_or(I.degree() + static_cast<int>(I.nvars()) + 2);
    auto table = bruteforce_minimal_resolution(I, I.nvars(), degree_bound);
    std::cout << table.render();
    std::cout << (table.is_linear(I.degree()) ? "linear resolution\n" : "not linear\n");
    return kOk;
  }
  auto certified = certify_input(input, cfg);
  if (!certified) return kCertification;
  const auto& ideal = certified->ideal;
  Resolution<F> res;
  try {
    res = build_resolution(ideal, certified->cert);
  } catch (const ConstructionError& e) {
    std::cout << e.what() << '\n';
    return kConstruction;
  }
  auto table = betti_from_resolution(res);
  if (betti_only) {
    std::cout << table.render();
    std::cout << "pd = " << res.length() << ", q(I) = " << certified->cert.q_max << '\n';
    return kOk;
  }
  print_certificate(std::cout, ideal, certified->cert);
  std::cout << '\n' << table.render() << "pd = " << res.length() << "\n\n";
  auto report = verify_resolution(res, ideal, &certified->cert, {cfg.emax, cfg.degreewise});
  print_report(std::cout, report);
  if (!cfg.out.empty()) write_file(cfg.out, resolution_to_json(res, ideal.ring()).dump(2) + "\n");
  if (!cfg.report.empty()) {
    auto j = report_to_json(report);
    j["betti"] = betti_to_json(table);
    j["pd"] = res.length();
    write_file(cfg.report, j.dump(2) + "\n");
  }
  return report.all_passed() ? kOk : kVerification;
}

template <ExactField F>
int cmd_verify(const RunConfig& cfg, const json& res_json, const RawIdealFile& raw) {
  auto imported = resolution_from_json<F>(res_json);
  auto input = instantiate<F>(raw);
  if (!(imported.ring == input.ideal.ring())) {
    VerificationReport mismatch;
    mismatch.checks.push_back(fail("augmentation", "resolution and ideal are over different variables"));
    print_report(std::cout, mismatch);
    if (!cfg.out.empty()) write_file(cfg.out, report_to_json(mismatch).dump(2) + "\n");
    return kVerification;
  }
  // The resolution's augmentation fixes the generator order it was built for.
  std::optional<IdealPresentation<F>> ordered;
  try {
    ordered.emplace(imported.ring, imported.resolution.augmentation());
  } catch (const PresentationError&) {
  }
  VerificationReport report;
  const auto* cert = static_cast<const ColonCertificate<F>*>(nullptr);
  std::optional<ColonCertificate<F>> cert_storage;
  if (ordered) {
    auto c = certify_linear_quotients(*ordered);
    if (auto* ok = std::get_if<ColonCertificate<F>>(&c)) cert_storage = *ok;
  }
  if (cert_storage) cert = &*cert_storage;
  report = verify_resolution(imported.resolution, input.ideal, cert, {cfg.emax, cfg.degreewise});
  if (!cert) report.checks.push_back(fail("pd", "augmentation order has no linear-quotients certificate"));
  print_report(std::cout, report);
  if (!cfg.out.empty()) write_file(cfg.out, report_to_json(report).dump(2) + "\n");
  return report.all_passed() ? kOk : kVerification;
}

template <ExactField F>
int cmd_hilbert(const RunConfig& cfg, const RawIdealFile& raw) {
  auto input = instantiate<F>(raw);
  if (!input.ideal.is_monomial()) {
    std::cerr << "hilbert: only monomial ideals are supported\n";
    return kUsage;
  }
  auto quotient = hilbert_series_quotient(input.ideal);
  auto ideal = hilbert_series_monomial(input.ideal);
  std::cout << "S/I: (" << quotient.numerator_string() << ") / (1 - t)^" << quotient.denominator_exponent << '\n';
  std::cout << "I:   (" << ideal.numerator_string() << ") / (1 - t)^" << ideal.denominator_exponent << '\n';
  if (!cfg.out.empty())
    write_file(cfg.out, json{{"quotient_numerator", quotient.numerator},
                             {"ideal_numerator", ideal.numerator},
                             {"denominator_exponent", ideal.denominator_exponent}}
                                .dump(2) + "\n");
  return kOk;
}

template <ExactField F>
int cmd_corpus(const RunConfig& cfg) {
  auto records = parse_manifest(read_file(cfg.input));
  const std::filesystem::path dir = cfg.out.empty() ? "." : cfg.out;
  std::filesystem::create_directories(dir);
  for (std::size_t i = 0; i < records.size(); ++i) {
    auto entry = expand_record<F>(records[i], cfg.seed + i);
    if (!entry) {
      std::cout << "skipped record " << i + 1 << " (" << records[i].family << "): no draw with a linear-quotients order\n";
      continue;
    }
    auto path = dir / (entry->name + ".ideal");
    write_file(path.string(), write_ideal_text(entry->ideal, entry->order));
    std::cout << path.string() << '\n';
  }
  return kOk;
}

int dispatch(const RunConfig& cfg) {
  if (cfg.command == "corpus")
    return with_field(cfg.field.empty() ? "QQ" : cfg.field, [&]<ExactField F>() { return cmd_corpus<F>(cfg); });
  if (cfg.command == "verify") {
    json res_json;
    try {
      res_json = json::parse(read_file(cfg.input));
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("invalid resolution JSON: ") + e.what());
    }
    auto raw = parse_ideal_file(read_file(cfg.ideal));
    const std::string field = cfg.field.empty() ? resolution_field(res_json) : cfg.field;
    return with_field(field, [&]<ExactField F>() { return cmd_verify<F>(cfg, res_json, raw); });
  }
  auto raw = parse_ideal_file(read_file(cfg.input));
  const std::string field = cfg.field.empty() ? raw.field : cfg.field;
  return with_field(field, [&]<ExactField F>() {
    if (cfg.command == "check") return cmd_check<F>(cfg, raw);
    if (cfg.command == "order") return cmd_order<F>(cfg, raw);
    if (cfg.command == "resolve") return cmd_resolve<F>(cfg, raw, false);
    if (cfg.command == "betti") return cmd_resolve<F>(cfg, raw, true);
    if (cfg.command == "hilbert") return cmd_hilbert<F>(cfg, raw);
    return static_cast<int>(kUsage);
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lqres: minimal linear resolutions of ideals with linear quotients"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub, const std::string& out_help = "output file") {
    sub->add_option("--field", cfg.field, "QQ or a prime (overrides the input file)");
    sub->add_option("--out", cfg.out, out_help);
  };
  auto add_ideal = [&](CLI::App* sub) {
    sub->add_option("ideal", cfg.input, "ideal file (text or JSON)")->required();
    add_common(sub);
  };
  auto add_order_mode = [&](CLI::App* sub) {
    sub->add_option("--order-mode", cfg.order_mode, "given | exhaustive | greedy | auto")
        ->check(CLI::IsMember({"given", "exhaustive", "greedy", "auto"}));
  };

  auto* check = app.add_subcommand("check", "certify linear quotients in the given order");
  add_ideal(check);
  add_order_mode(check);

  auto* order = app.add_subcommand("order", "search for an order with linear quotients");
  add_ideal(order);
  add_order_mode(order);

  auto* resolve = app.add_subcommand("resolve", "build and verify the linear resolution");
  add_ideal(resolve);
  add_order_mode(resolve);
  resolve->add_option("--emax", cfg.emax, "highest degree for the degreewise exactness check");
  resolve->add_option("--report", cfg.report, "write the verification report as JSON");
  resolve->add_flag("--degreewise", cfg.degreewise, "also run the degreewise check for monomial ideals");

  auto* betti = app.add_subcommand("betti", "print the Betti diagram");
  add_ideal(betti);
  add_order_mode(betti);
  betti->add_flag("--bruteforce", cfg.bruteforce, "compute the minimal resolution directly (no linear quotients)");
  betti->add_option("--emax", cfg.emax, "degree bound for --bruteforce on non-monomial ideals");

  auto* verify = app.add_subcommand("verify", "re-check an exported resolution against an ideal");
  verify->add_option("resolution", cfg.input, "resolution JSON")->required();
  verify->add_option("ideal", cfg.ideal, "ideal file")->required();
  add_common(verify);
  verify->add_option("--emax", cfg.emax, "highest degree for the degreewise exactness check");
  verify->add_flag("--degreewise", cfg.degreewise, "also run the degreewise check for monomial ideals");

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert series of a monomial ideal");
  add_ideal(hilbert);

  auto* corpus = app.add_subcommand("corpus", "expand a corpus manifest into ideal files");
  corpus->add_option("manifest", cfg.input, "manifest JSON")->required();
  add_common(corpus, "output directory (default: current directory)");
  corpus->add_option("--seed", cfg.seed, "base seed for records without one");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    return dispatch(cfg);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const PresentationError& e) {
    std::cerr << "invalid ideal: " << e.what() << '\n';
    return kParse;
  } catch (const ConstructionError& e) {
    std::cerr << e.what() << '\n';
    return kConstruction;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
