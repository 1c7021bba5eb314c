// Command-line front end: germ computations, membership verdicts, value-set
// enumeration with an optional on-disk cache, realization, transfer, and
// accumulation reports. Negative verdicts exit 0; only malformed input or
// internal failures exit 1.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "toricmld/io.hpp"

namespace {

using namespace toricmld;

std::vector<long> parse_long_list(const std::string& s, const char* what) {
  std::vector<long> out;
  size_t start = 0;
  while (true) {
    size_t comma = s.find(',', start);
    std::string part =
        comma == std::string::npos ? s.substr(start) : s.substr(start, comma - start);
    out.push_back(Integer::from_string(part).to_long());
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.empty()) fail(Errc::InvalidInput, std::string("empty list for ") + what);
  return out;
}

CandidatePair pair_from_options(const std::string& xs, const std::string& as) {
  return CandidatePair(parse_rational_vector(xs), parse_rational_vector(as));
}

void print_v_verdict(const CandidatePair& p, const MembershipVerdict& v) {
  if (v.ok) {
    std::cout << "yes\n";
    return;
  }
  if (v.failing_index) {
    const int i = *v.failing_index;
    Integer others(1);
    for (int j = 0; j < p.arity(); ++j)
      if (j != i) others = lcm(others, p.x(j).den());
    std::cout << "no: index(x_" << (i + 1) << ")=" << p.x(i).den()
              << " does not divide " << others << "\n";
  } else {
    std::cout << "no: m=" << *v.failing_m << " gives pairing difference "
              << v.deficit << "\n";
  }
}

std::string set_cache_key(int d, const CoefficientSet& A, long q_max) {
  std::string key = "enum_d" + std::to_string(d) + "_q" + std::to_string(q_max) + "_A";
  for (const auto& a : A.values()) {
    std::string v = a.str();
    size_t slash = v.find('/');
    if (slash != std::string::npos) v = v.substr(0, slash) + "over" + v.substr(slash + 1);
    key += "_" + v;
  }
  return key + ".json";
}

// Enumerate through the cache directory named by TORIC_MLD_CACHE (caching is
// off when unset). In audit mode a cache hit is recomputed and compared
// byte-for-byte; divergence is a hard failure.
EnumeratedMldSet enumerate_cached(int d, const CoefficientSet& A, long q_max,
                                  bool audit) {
  const char* cache_dir = std::getenv("TORIC_MLD_CACHE");
  if (cache_dir == nullptr || *cache_dir == '\0')
    return enumerate_mld_set(d, A, q_max);

  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(cache_dir, ec);
  if (ec) fail(Errc::InvalidInput, std::string("cannot create cache directory: ") + cache_dir);
  const fs::path path = fs::path(cache_dir) / set_cache_key(d, A, q_max);

  if (fs::exists(path)) {
    const std::string cached = read_text_file(path.string());
    if (audit) {
      const std::string fresh = set_to_json(enumerate_mld_set(d, A, q_max)).dump(2) + "\n";
      if (fresh != cached)
        fail(Errc::InternalError, "cache audit mismatch for " + path.string());
    }
    Json doc;
    try {
      doc = Json::parse(cached);
    } catch (const nlohmann::json::parse_error& e) {
      fail(Errc::InvalidInput, "corrupt cache entry " + path.string() + ": " + e.what());
    }
    return set_from_json(doc);
  }

  EnumeratedMldSet set = enumerate_mld_set(d, A, q_max);
  const fs::path tmp = path.string() + ".tmp";
  write_text_file(tmp.string(), set_to_json(set).dump(2) + "\n");
  fs::rename(tmp, path, ec);
  if (ec) fail(Errc::InvalidInput, "cannot store cache entry: " + path.string());
  return set;
}

int run(int argc, char** argv) {
  CLI::App app{"exact minimal log discrepancy computations for toric germs"};
  app.require_subcommand(1);
  bool timing = false;
  app.add_flag("--time", timing, "print elapsed milliseconds on stderr");
  const auto t0 = std::chrono::steady_clock::now();

  // germ-mld
  auto* c_mld = app.add_subcommand("germ-mld", "minimal log discrepancy of a germ file");
  std::string mld_file, mld_face;
  int mld_codim = -1;
  c_mld->add_option("file", mld_file, "germ file")->required();
  auto* face_opt = c_mld->add_option("--face", mld_face, "1-based ray indices of a face");
  auto* codim_opt = c_mld->add_option("--codim", mld_codim, "codimension of the point");
  face_opt->needs(codim_opt);

  // divisor-ld
  auto* c_ld = app.add_subcommand("divisor-ld", "log discrepancy of the divisor over e");
  std::string ld_file, ld_e;
  c_ld->add_option("file", ld_file, "germ file")->required();
  c_ld->add_option("--e", ld_e, "lattice point, e.g. 1/2,1/2")->required();

  // vcheck / tilde-check
  auto* c_v = app.add_subcommand("vcheck", "candidate-set membership verdict");
  auto* c_tv = app.add_subcommand("tilde-check", "relaxed-set membership verdict");
  std::string v_x, v_a, tv_x, tv_a;
  c_v->add_option("-x", v_x, "x entries")->required();
  c_v->add_option("-a", v_a, "a entries")->required();
  c_tv->add_option("-x", tv_x, "x entries")->required();
  c_tv->add_option("-a", tv_a, "a entries")->required();

  // classify-v1
  auto* c_c1 = app.add_subcommand("classify-v1", "arity-1 closed-form membership");
  std::string c1_x, c1_a;
  c_c1->add_option("-x", c1_x, "x value")->required();
  c_c1->add_option("-a", c1_a, "a value")->required();

  // enumerate
  auto* c_enum = app.add_subcommand("enumerate", "attained values up to an index bound");
  int en_d = 0;
  std::string en_A, en_csv, en_json;
  long en_q = 0;
  bool en_audit = false;
  c_enum->add_option("-d", en_d, "dimension")->required();
  c_enum->add_option("-A", en_A, "coefficient values, e.g. 1 or 1,1/2")->required();
  c_enum->add_option("--max-index", en_q, "index bound")->required();
  c_enum->add_option("--csv", en_csv, "write CSV (plus germ files) here");
  c_enum->add_option("--json", en_json, "write the structured document here");
  c_enum->add_flag("--cache-audit", en_audit, "recompute on cache hit and compare");

  // realize
  auto* c_rz = app.add_subcommand("realize", "construct a germ attaining the pairing");
  std::string rz_x, rz_a, rz_out;
  int rz_d = 0;
  c_rz->add_option("-x", rz_x, "x entries")->required();
  c_rz->add_option("-a", rz_a, "a entries")->required();
  c_rz->add_option("-d", rz_d, "dimension")->required();
  c_rz->add_option("--out", rz_out, "write the germ file here");

  // transfer
  auto* c_tr = app.add_subcommand("transfer", "relaxed-set member to candidate-set member");
  std::string tr_x, tr_a;
  c_tr->add_option("-x", tr_x, "x entries")->required();
  c_tr->add_option("-a", tr_a, "a entries")->required();

  // accum
  auto* c_ac = app.add_subcommand("accum", "staged accumulation report");
  int ac_d = 0;
  std::string ac_A, ac_stages, ac_csv, ac_radius = "1/8";
  c_ac->add_option("-d", ac_d, "dimension")->required();
  c_ac->add_option("-A", ac_A, "coefficient values")->required();
  c_ac->add_option("--stages", ac_stages, "increasing index bounds, e.g. 3,5,9")->required();
  c_ac->add_option("--radius", ac_radius, "cluster radius (default 1/8)");
  c_ac->add_option("--csv", ac_csv, "write the per-target CSV here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  if (c_mld->parsed()) {
    ToricGerm germ = read_germ_file(mld_file);
    if (codim_opt->count() > 0) {
      Face face;
      if (!mld_face.empty())
        for (long i : parse_long_list(mld_face, "--face"))
          face.ray_indices.push_back(static_cast<int>(i - 1));
      std::cout << mld_at_point(germ, face, mld_codim) << "\n";
    } else {
      MldWitness w = mld_at_origin(germ);
      std::cout << w.value << "\n";
      std::cout << "witness " << format_vector(w.point) << "\n";
    }
  } else if (c_ld->parsed()) {
    ToricGerm germ = read_germ_file(ld_file);
    std::cout << log_discrepancy_of_divisor(germ, parse_rational_vector(ld_e)) << "\n";
  } else if (c_v->parsed()) {
    CandidatePair p = pair_from_options(v_x, v_a);
    print_v_verdict(p, check_V(p));
  } else if (c_tv->parsed()) {
    CandidatePair p = pair_from_options(tv_x, tv_a);
    print_v_verdict(p, check_tilde_V(p));
  } else if (c_c1->parsed()) {
    std::cout << (tilde_V1_classify(parse_rational(c1_x), parse_rational(c1_a)) ? "yes"
                                                                                : "no")
              << "\n";
  } else if (c_enum->parsed()) {
    CoefficientSet A(
        [&] {
          RationalVector v = parse_rational_vector(en_A);
          return std::vector<Rational>(v.data(), v.data() + v.size());
        }());
    EnumeratedMldSet set = enumerate_cached(en_d, A, en_q, en_audit);
    std::cout << "mld values for dimension " << set.dimension << ", coefficients "
              << en_A << ", index <= " << set.max_index << " (" << set.entries.size()
              << " values; complete up to this index)\n";
    for (const auto& e : set.entries)
      std::cout << e.value << "  s=" << e.witness.arity() << "  x="
                << format_vector(e.witness.x) << "  a=" << format_vector(e.witness.a)
                << "\n";
    if (!en_csv.empty()) write_set_csv(set, en_csv);
    if (!en_json.empty()) write_text_file(en_json, set_to_json(set).dump(2) + "\n");
  } else if (c_rz->parsed()) {
    CandidatePair p = pair_from_options(rz_x, rz_a);
    ToricGerm germ = realize(p, rz_d);
    std::cout << "mld " << mld_at_origin(germ).value << "\n";
    if (!rz_out.empty()) write_germ_file(rz_out, germ);
  } else if (c_tr->parsed()) {
    CandidatePair out = transfer_tilde_to_V(pair_from_options(tr_x, tr_a));
    std::cout << "x " << format_vector(out.x) << "\n";
    std::cout << "a " << format_vector(out.a) << "\n";
    std::cout << "value " << pairing(out) << "\n";
  } else if (c_ac->parsed()) {
    CoefficientSet A(
        [&] {
          RationalVector v = parse_rational_vector(ac_A);
          return std::vector<Rational>(v.data(), v.data() + v.size());
        }());
    AccumulationReport rep = accumulation_report(
        ac_d, A, parse_long_list(ac_stages, "--stages"), parse_rational(ac_radius));
    std::cout << report_to_text(rep);
    if (!ac_csv.empty()) write_text_file(ac_csv, report_to_csv(rep));
  }

  if (timing) {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    std::cerr << "elapsed_ms " << ms << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";  // what() = "Code: detail"
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: InternalError: " << e.what() << "\n";
    return 1;
  }
}
