// numsgp: command-line front end for the semigroup library.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "numsgp/betti.hpp"
#include "numsgp/serialize.hpp"
#include "numsgp/verify.hpp"

using namespace numsgp;

namespace {

constexpr int kExitPrecondition = 2;
constexpr int kExitTheoremFail = 3;
constexpr int kExitInternal = 1;

struct Options {
  std::vector<Int> gens;
  std::string format = "text";
  bool json() const { return format == "json"; }
};

unsigned worker_count() {
  if (const char* env = std::getenv("NUMSGP_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string join(const std::vector<Int>& v, const char* sep = ", ") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

void emit(const Options& o, const Json& j, const std::string& text) {
  if (o.json())
    std::cout << dump(j) << '\n';
  else
    std::cout << text;
}

int verdict_exit(const std::vector<Report>& reports) {
  bool fail = std::any_of(reports.begin(), reports.end(), [](const Report& r) { return r.failed(); });
  return fail ? kExitTheoremFail : 0;
}

int run_analyze(const Options& o) {
  NumericalSemigroup sg(o.gens);
  PFData pf = sg.pseudo_frobenius();
  Json j = {{"semigroup", to_json(sg)}, {"pf_data", to_json(pf)}};
  std::ostringstream os;
  os << "H = " << sg.to_string() << '\n'
     << "F = " << pf.frobenius << ", g = " << pf.genus << '\n'
     << "PF = {" << join(pf.pf) << "}, type " << pf.type << '\n'
     << "classification: " << to_string(pf.classification) << '\n';
  if (sg.embedding_dimension() >= 2) {
    AlphaTable al = alphas(sg);
    j["alphas"] = to_json(al);
    os << "alphas = (" << join(al.alpha) << ")\n";
  }
  emit(o, j, os.str());
  return 0;
}

int run_rf(const Options& o, const std::vector<Int>& fs, std::size_t cap) {
  NumericalSemigroup sg(o.gens);
  PFData pf = sg.pseudo_frobenius();
  std::vector<Int> targets = fs.empty() ? pf.pf : fs;
  std::vector<Int> alpha = sg.embedding_dimension() >= 2 ? alphas(sg).alpha : std::vector<Int>{};
  Json j = {{"semigroup", to_json(sg)}, {"pf", ints_json(pf.pf)}};
  Json per_f = Json::array();
  std::ostringstream os;
  os << "H = " << sg.to_string() << ", PF = {" << join(pf.pf) << "}\n";
  for (Int f : targets) {
    auto ms = rf_matrices(sg, f, cap);
    auto rel = rf_relations(sg, f, ms);
    Json mj = Json::array(), rj = Json::array();
    os << "RF(" << f << "): " << ms.size() << " matrices\n";
    for (const auto& m : ms) {
      Json entry = to_json(m);
      Json sj = Json::array();
      std::string sp;
      if (!alpha.empty())
        for (const auto& s : special_rows(sg, m, alpha)) {
          sj.push_back(to_json(s));
          sp += " row" + std::to_string(s.source + 1);
        }
      entry["special_rows"] = sj;
      mj.push_back(entry);
      os << "  " << m.to_string() << (sp.empty() ? "" : "  special:" + sp) << '\n';
    }
    os << "  relations:\n";
    for (const auto& b : rel) {
      bool minimal = is_minimal_generator(sg, b);
      Json bj = to_json(b);
      bj["minimal"] = minimal;
      rj.push_back(bj);
      os << "    " << b.to_string() << "  (degree " << b.degree << (minimal ? ", minimal" : "")
         << ")\n";
    }
    per_f.push_back({{"f", int_json(f)}, {"matrices", mj}, {"relations", rj}});
  }
  j["rf"] = per_f;
  Report laws = verify_rf_laws(sg);
  j["laws"] = to_json(laws);
  os << laws.to_text();
  emit(o, j, os.str());
  return verdict_exit({laws});
}

int run_ideal(const Options& o) {
  NumericalSemigroup sg(o.gens);
  PFData pf = sg.pseudo_frobenius();
  auto gens = minimal_generators(sg);
  Json j = {{"semigroup", to_json(sg)}, {"mu", gens.size()}};
  Json gj = Json::array();
  std::ostringstream os;
  os << "H = " << sg.to_string() << "\nmu = " << gens.size() << '\n';
  for (const auto& b : gens) {
    gj.push_back(to_json(b));
    os << "  " << b.to_string() << "  (degree " << b.degree << ")\n";
  }
  j["minimal_generators"] = gj;
  std::vector<Report> reports;
  const std::size_t e = sg.embedding_dimension();
  if (e == 4 && gens.size() == 7) {
    const auto& n = sg.generators();
    bool rel = n[0] + n[3] == n[1] + n[2];
    j["relation_n1_n4_n2_n3"] = rel;
    os << "relation " << n[0] << "+" << n[3] << (rel ? " = " : " != ") << n[1] << "+" << n[2]
       << '\n';
  }
  if (e >= 2 && e <= 6) {
    BettiTable t = graded_betti(sg);
    j["betti"] = to_json(t);
    os << "betti totals:";
    for (std::size_t i = 0; i < t.graded.size(); ++i) os << ' ' << t.total(i);
    os << "\na-degrees: " << join(t.a_degrees) << "\nb-degrees: " << join(t.b_degrees) << '\n';
    if (e == 4 && pf.almost_symmetric()) reports.push_back(verify_comparison(sg, t));
    reports.push_back(verify_betti_laws(sg));
  }
  if (e == 4) reports.push_back(verify_seven_gen(sg));
  if (e == 3 || e == 4) reports.push_back(verify_rf_generation(sg));
  Json rj = Json::array();
  for (const auto& r : reports) {
    rj.push_back(to_json(r));
    os << r.to_text();
  }
  j["reports"] = rj;
  emit(o, j, os.str());
  return verdict_exit(reports);
}

int run_komeda(const Options& o) {
  NumericalSemigroup sg(o.gens);
  KomedaForm k = komeda_form(sg);
  Report r = verify_type2_structure(sg);
  Json j = {{"semigroup", to_json(sg)}, {"komeda", to_json(k)}, {"report", to_json(r)}};
  std::ostringstream os;
  os << "H = " << sg.to_string() << "\ncanonical order: (" << join(k.generators(sg)) << ")\n"
     << "alphas: (" << join(k.alphas) << "), alpha42 = " << k.alpha42 << '\n'
     << "RF(F/2) = " << k.matrix.to_string() << '\n'
     << r.to_text();
  emit(o, j, os.str());
  return verdict_exit({r});
}

std::vector<std::vector<Int>> read_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open corpus " + path);
  std::vector<std::vector<Int>> out;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::replace_if(line.begin(), line.end(), [](char c) { return c == ',' || c == '<' || c == '>'; }, ' ');
    std::istringstream ls(line);
    std::vector<Int> gens;
    Int v;
    while (ls >> v) gens.push_back(v);
    if (!ls.eof()) throw Error(ErrorKind::InvalidInput, "bad corpus line: " + line);
    if (!gens.empty()) out.push_back(gens);
  }
  return out;
}

int run_verify(const Options& o, const std::string& corpus) {
  std::vector<std::vector<Int>> inputs;
  if (!corpus.empty()) inputs = read_corpus(corpus);
  if (!o.gens.empty()) inputs.push_back(o.gens);
  if (inputs.empty()) throw Error(ErrorKind::EmptyInput, "no semigroup given");

  struct Outcome {
    std::vector<Report> reports;
    std::string error;
    int code = 0;
  };
  std::vector<Outcome> results(inputs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < inputs.size(); i = next++) {
      try {
        results[i].reports = verify_all(NumericalSemigroup(inputs[i]));
      } catch (const Error& e) {
        results[i].error = e.what();
        results[i].code = e.kind() == ErrorKind::Overflow ? kExitInternal : kExitPrecondition;
      }
    }
  };
  unsigned threads = std::min<unsigned>(worker_count(), static_cast<unsigned>(inputs.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  int code = 0;
  Json all = Json::array();
  std::ostringstream os;
  std::size_t failures = 0;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    Json entry = {{"generators", ints_json(inputs[i])}};
    if (!results[i].error.empty()) {
      entry["error"] = results[i].error;
      os << "<" << join(inputs[i], ",") << ">: error: " << results[i].error << '\n';
      code = std::max(code, results[i].code);
    } else {
      Json rj = Json::array();
      bool failed = false;
      for (const auto& r : results[i].reports) {
        rj.push_back(to_json(r));
        failed = failed || r.failed();
        if (inputs.size() == 1 || r.failed()) os << r.to_text();
      }
      entry["reports"] = rj;
      if (failed) {
        ++failures;
        code = kExitTheoremFail;
      }
    }
    all.push_back(entry);
  }
  os << inputs.size() << " semigroups, " << failures << " with failing checks\n";
  emit(o, {{"results", all}, {"failures", failures}}, os.str());
  return code;
}

Int resume_point(const std::string& path) {
  std::ifstream in(path);
  std::string line, last;
  while (std::getline(in, line))
    if (!line.empty()) last = line;
  if (last.empty()) return 0;
  Json j = Json::parse(last);
  const auto& m = j.at("m");
  return (m.is_string() ? std::stoll(m.get<std::string>()) : m.get<Int>()) + 1;
}

int run_scan(const Options& o, Int m_max, Int from_m, const std::string& out_path) {
  NumericalSemigroup sg(o.gens);
  if (m_max < 0) m_max = default_scan_limit(sg);
  if (from_m < 0) from_m = out_path.empty() ? 0 : resume_point(out_path);
  auto records = scan(sg, m_max, from_m, worker_count());
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path, std::ios::app);
    if (!file) throw Error(ErrorKind::InvalidInput, "cannot write " + out_path);
  }
  std::ostream& sink = out_path.empty() ? std::cout : file;
  std::vector<Int> type3;
  for (const auto& r : records) {
    if (o.json() || !out_path.empty()) sink << to_json(r).dump() << '\n';
    if (r.valid && r.minimal && r.classification == Classification::AlmostSymmetric && r.type == 3)
      type3.push_back(r.m);
  }
  if (!o.json()) {
    std::cout << "scanned m in [" << from_m << ", " << m_max << "] for " << sg.to_string() << '\n'
              << "almost symmetric type 3 at m = " << join(type3) << '\n';
  }
  return 0;
}

int run_family(const Options& o, FamilyParams p, Int steps) {
  NumericalSemigroup sg = construct_family(p);
  Report r = verify_family(p, steps);
  Json j = {{"semigroup", to_json(sg)}, {"report", to_json(r)}};
  emit(o, j, "H(" + std::to_string(p.a) + "," + std::to_string(p.b) + ";" + std::to_string(p.d) +
                 ") = " + sg.to_string() + '\n' + r.to_text());
  return verdict_exit({r});
}

int run_search_odd(const Options& o, Int bound, Int min_n4) {
  auto hits = odd_generator_search(bound, min_n4);
  Json hj = Json::array();
  std::ostringstream os;
  std::size_t all_odd = 0;
  for (const auto& h : hits) {
    hj.push_back(to_json(h));
    all_odd += h.all_odd;
    os << "<" << join(h.generators, ",") << "> d=" << h.d << (h.all_odd ? " all odd" : "") << '\n';
  }
  os << hits.size() << " almost symmetric type-3 semigroups with d > 1 or all generators odd; "
     << all_odd << " all odd\n";
  emit(o, {{"bound", int_json(bound)}, {"hits", hj}, {"all_odd", all_odd}}, os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical semigroup analysis: pseudo-Frobenius numbers, RF-matrices, toric ideals"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  auto gens_opt = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("generators", o.gens, "Generators of H");
    if (required) opt->required();
  };

  auto* analyze = app.add_subcommand("analyze", "PF data, classification and alphas");
  gens_opt(analyze, true);

  std::vector<Int> fs;
  std::size_t cap = kDefaultMatrixCap;
  auto* rf = app.add_subcommand("rf", "RF-matrices, RF-relations, special rows and their laws");
  gens_opt(rf, true);
  rf->add_option("--f", fs, "Pseudo-Frobenius numbers to expand (default: all)");
  rf->add_option("--cap", cap, "Maximal number of matrices per f")->capture_default_str();

  auto* ideal = app.add_subcommand("ideal", "Minimal generators of I_H, Betti table and degree laws");
  gens_opt(ideal, true);

  auto* komeda = app.add_subcommand("komeda", "Canonical RF(F/2) of a pseudo-symmetric 4-generated H");
  gens_opt(komeda, true);

  std::string corpus;
  auto* verify = app.add_subcommand("verify", "Run every applicable verifier");
  gens_opt(verify, false);
  verify->add_option("--corpus", corpus, "File with one generator list per line");

  Int m_max = -1, from_m = -1;
  std::string out_path;
  auto* scan_cmd = app.add_subcommand("scan", "Classify the shifts H+m");
  gens_opt(scan_cmd, true);
  scan_cmd->add_option("--m-max", m_max, "Last shift (default 20*n_e^2, at most 10^6)");
  scan_cmd->add_option("--from-m", from_m, "First shift (default: resume after --out)");
  scan_cmd->add_option("--out", out_path, "Append JSON lines to this file");

  FamilyParams fp;
  Int steps = 5;
  auto* family = app.add_subcommand("family", "Construct and verify H(a,b;d)");
  family->add_option("--a", fp.a)->required();
  family->add_option("--b", fp.b)->required();
  family->add_option("--d", fp.d)->required();
  family->add_option("--steps", steps)->capture_default_str();

  Int bound = 30, min_n4 = 0;
  auto* odd = app.add_subcommand("search-odd",
                                 "Search 4-generated almost symmetric type-3 semigroups with odd generators");
  odd->add_option("--bound", bound, "Largest generator")->capture_default_str();
  odd->add_option("--min-n4", min_n4, "Smallest largest generator");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitPrecondition;
  }

  try {
    if (*analyze) return run_analyze(o);
    if (*rf) return run_rf(o, fs, cap);
    if (*ideal) return run_ideal(o);
    if (*komeda) return run_komeda(o);
    if (*verify) return run_verify(o, corpus);
    if (*scan_cmd) return run_scan(o, m_max, from_m, out_path);
    if (*family) return run_family(o, fp, steps);
    if (*odd) return run_search_odd(o, bound, min_n4);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return e.kind() == ErrorKind::Overflow ? kExitInternal : kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}
