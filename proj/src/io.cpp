#include "toricmld/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace toricmld {
namespace {

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::from_string(j.get<std::string>());
  if (j.is_number_integer())
    return Rational(Integer::from_string(std::to_string(j.get<long long>())));
  if (j.is_number_float())
    fail(Errc::InvalidInput, "floating-point values are not accepted");
  fail(Errc::InvalidInput, "expected a rational string or integer");
}

RationalVector vector_from_json(const Json& j) {
  if (!j.is_array()) fail(Errc::InvalidInput, "expected an array of rationals");
  RationalVector v(static_cast<Eigen::Index>(j.size()));
  Eigen::Index i = 0;
  for (const auto& e : j) v(i++) = rational_from_json(e);
  return v;
}

Json vector_to_json(const RationalVector& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i).str());
  return a;
}

const Json& field(const Json& doc, const char* name) {
  if (!doc.is_object() || !doc.contains(name))
    fail(Errc::InvalidInput, std::string("missing field '") + name + "'");
  return doc.at(name);
}

int int_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer())
    fail(Errc::InvalidInput, std::string(what) + " must be an integer");
  long long v = j.get<long long>();
  if (v < 0 || v > 1000000)
    fail(Errc::InvalidInput, std::string(what) + " out of range");
  return static_cast<int>(v);
}

}  // namespace

Rational parse_rational(const std::string& s) { return Rational::from_string(s); }

RationalVector parse_rational_vector(const std::string& s) {
  if (s.empty()) fail(Errc::InvalidInput, "empty rational list");
  std::vector<Rational> out;
  size_t start = 0;
  while (true) {
    size_t comma = s.find(',', start);
    std::string part =
        comma == std::string::npos ? s.substr(start) : s.substr(start, comma - start);
    out.push_back(Rational::from_string(part));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  RationalVector v(static_cast<Eigen::Index>(out.size()));
  for (size_t i = 0; i < out.size(); ++i) v(static_cast<Eigen::Index>(i)) = out[i];
  return v;
}

std::string format_vector(const RationalVector& v) {
  std::string out;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i > 0) out += ',';
    out += v(i).str();
  }
  return out;
}

Json germ_to_json(const ToricGerm& germ) {
  Json doc;
  doc["dim"] = germ.dim();
  Json gens = Json::array();
  for (const auto& g : germ.lattice().extra_generators()) gens.push_back(vector_to_json(g));
  doc["extra_generators"] = std::move(gens);
  Json rays = Json::array();
  for (int j = 0; j < germ.num_rays(); ++j)
    rays.push_back(vector_to_json(germ.rays().col(j)));
  doc["rays"] = std::move(rays);
  Json coeffs = Json::array();
  for (const auto& b : germ.coefficients()) coeffs.push_back(b.str());
  doc["coefficients"] = std::move(coeffs);
  return doc;
}

ToricGerm germ_from_json(const Json& doc) {
  const int d = int_from_json(field(doc, "dim"), "dim");
  if (d < 1) fail(Errc::InvalidInput, "dim must be positive");

  std::vector<RationalVector> gens;
  for (const auto& g : field(doc, "extra_generators")) {
    RationalVector v = vector_from_json(g);
    if (v.size() != d) fail(Errc::InvalidInput, "generator has wrong length");
    gens.push_back(std::move(v));
  }
  SuperLattice lat(d, gens);

  const Json& jr = field(doc, "rays");
  if (!jr.is_array() || jr.empty()) fail(Errc::InvalidInput, "rays must be a nonempty array");
  RationalMatrix rays(d, static_cast<Eigen::Index>(jr.size()));
  Eigen::Index col = 0;
  for (const auto& r : jr) {
    RationalVector v = vector_from_json(r);
    if (v.size() != d) fail(Errc::InvalidInput, "ray has wrong length");
    rays.col(col++) = v;
  }

  std::vector<Rational> coeffs;
  for (const auto& b : field(doc, "coefficients")) coeffs.push_back(rational_from_json(b));

  return ToricGerm(lat, rays, coeffs);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::InvalidInput, "cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(Errc::InvalidInput, "cannot write file: " + path);
  out << content;
  if (!out.good()) fail(Errc::InvalidInput, "write failed: " + path);
}

void write_germ_file(const std::string& path, const ToricGerm& germ) {
  write_text_file(path, germ_to_json(germ).dump(2) + "\n");
}

ToricGerm read_germ_file(const std::string& path) {
  Json doc;
  try {
    doc = Json::parse(read_text_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    fail(Errc::InvalidInput, std::string("germ file is not valid JSON: ") + e.what());
  }
  return germ_from_json(doc);
}

Json set_to_json(const EnumeratedMldSet& set) {
  Json doc;
  doc["dimension"] = set.dimension;
  Json av = Json::array();
  for (const auto& a : set.coefficients.values()) av.push_back(a.str());
  doc["coefficients"] = std::move(av);
  doc["max_index"] = set.max_index;
  doc["complete_up_to_index"] = set.max_index;  // truncation marker
  Json entries = Json::array();
  for (const auto& e : set.entries) {
    Json je;
    je["value"] = e.value.str();
    je["arity"] = e.witness.arity();
    je["x"] = vector_to_json(e.witness.x);
    je["a"] = vector_to_json(e.witness.a);
    je["germ"] = germ_to_json(e.germ);
    entries.push_back(std::move(je));
  }
  doc["entries"] = std::move(entries);
  return doc;
}

EnumeratedMldSet set_from_json(const Json& doc) {
  const int d = int_from_json(field(doc, "dimension"), "dimension");
  std::vector<Rational> av;
  for (const auto& a : field(doc, "coefficients")) av.push_back(rational_from_json(a));
  const Json& jq = field(doc, "max_index");
  if (!jq.is_number_integer()) fail(Errc::InvalidInput, "max_index must be an integer");
  EnumeratedMldSet set{d, CoefficientSet(std::move(av)), jq.get<long>(), {}};
  for (const auto& je : field(doc, "entries")) {
    Rational value = rational_from_json(field(je, "value"));
    CandidatePair witness(vector_from_json(field(je, "x")),
                          vector_from_json(field(je, "a")));
    if (!(pairing(witness) == value))
      fail(Errc::InvalidInput, "entry value does not match its witness pairing");
    ToricGerm germ = germ_from_json(field(je, "germ"));
    set.entries.push_back(MldSetEntry{std::move(value), std::move(witness), std::move(germ)});
  }
  return set;
}

std::string set_to_csv(const EnumeratedMldSet& set,
                       const std::vector<std::string>& germ_refs) {
  if (germ_refs.size() != set.entries.size())
    fail(Errc::InvalidInput, "one germ reference per entry is required");
  std::string out = "value,s,x,a,germ\n";
  for (size_t i = 0; i < set.entries.size(); ++i) {
    const auto& e = set.entries[i];
    out += e.value.str();
    out += ',' + std::to_string(e.witness.arity());
    out += ",\"" + format_vector(e.witness.x) + '"';
    out += ",\"" + format_vector(e.witness.a) + '"';
    out += ',' + germ_refs[i] + '\n';
  }
  return out;
}

void write_set_csv(const EnumeratedMldSet& set, const std::string& csv_path) {
  namespace fs = std::filesystem;
  const fs::path csv(csv_path);
  const std::string germ_dir_name = csv.filename().string() + ".germs";
  const fs::path germ_dir = csv.parent_path() / germ_dir_name;
  std::error_code ec;
  fs::create_directories(germ_dir, ec);
  if (ec) fail(Errc::InvalidInput, "cannot create directory: " + germ_dir.string());

  std::vector<std::string> refs;
  for (size_t i = 0; i < set.entries.size(); ++i) {
    std::string name = "entry_" + std::to_string(i) + ".germ";
    write_germ_file((germ_dir / name).string(), set.entries[i].germ);
    refs.push_back(germ_dir_name + "/" + name);
  }
  write_text_file(csv_path, set_to_csv(set, refs));
}

std::string report_to_csv(const AccumulationReport& rep) {
  std::string out = "stage,target,nearest,gap\n";
  for (const auto& t : rep.targets) {
    for (size_t si = 0; si < rep.stages.size(); ++si) {
      out += std::to_string(rep.stages[si]);
      out += ',' + t.value.str() + ',';
      if (t.nearest[si]) out += t.nearest[si]->str();
      out += ',';
      if (t.gap[si]) out += t.gap[si]->str();
      out += '\n';
    }
  }
  return out;
}

std::string report_to_text(const AccumulationReport& rep) {
  std::ostringstream out;
  out << "accumulation report: dimension " << rep.dimension << ", stages";
  for (long q : rep.stages) out << ' ' << q;
  out << ", radius " << rep.cluster_radius << '\n';
  out << "coefficients:";
  for (const auto& a : rep.coefficients.values()) out << ' ' << a;
  out << '\n';
  for (size_t si = 0; si < rep.stages.size(); ++si) {
    out << "stage " << rep.stages[si] << " values (" << rep.stage_values[si].size() << "):";
    for (const auto& v : rep.stage_values[si]) out << ' ' << v;
    out << '\n';
  }
  out << "predicted limits (" << rep.predicted.size() << "):";
  for (const auto& v : rep.predicted) out << ' ' << v;
  out << '\n';
  for (const auto& t : rep.targets) {
    out << "target " << t.value << ": attained";
    for (bool b : t.attained) out << ' ' << (b ? "yes" : "no");
    out << "; gap";
    for (const auto& g : t.gap) {
      out << ' ';
      if (g)
        out << *g;
      else
        out << '-';
    }
    out << '\n';
  }
  if (rep.clusters.empty()) {
    out << "clusters: none\n";
  } else {
    for (const auto& c : rep.clusters) {
      out << "cluster at " << c.center << ": gaps";
      for (const auto& g : c.gaps) out << ' ' << g;
      out << "; predicted " << (c.in_predicted ? "yes" : "no") << '\n';
    }
  }
  out << "note: finite-stage experiment; shrinking gaps are evidence, not proof\n";
  return out.str();
}

}  // namespace toricmld
