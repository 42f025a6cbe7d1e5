// Batch front end: show, spec, verify, hom.
//
// Exit codes: 0 ok, 1 some verification FAIL, 2 input error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "latspec.hpp"

using namespace latspec;

namespace {

constexpr int kInputError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FiniteLattice load_lattice(const std::string& path) { return parse_lattice(read_file(path)); }

// Ordered key/value output rendered as "key: value" lines or one JSON object.
class Fields {
 public:
  void add(std::string key, std::string value) { items_.emplace_back(std::move(key), std::move(value)); }
  void print(bool structured) const {
    if (structured) {
      nlohmann::ordered_json j = nlohmann::ordered_json::array();
      for (const auto& [k, v] : items_) j.push_back({{"key", k}, {"value", v}});
      std::cout << j.dump(2) << '\n';
      return;
    }
    for (const auto& [k, v] : items_) std::cout << k << ": " << v << '\n';
  }

 private:
  std::vector<std::pair<std::string, std::string>> items_;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_show(const std::string& file, bool structured) {
  const FiniteLattice L = load_lattice(file);
  Fields f;
  f.add("lattice", L.name());
  f.add("elements", L.format(L.carrier()));
  std::string covers;
  for (const Cover& c : L.covers()) {
    if (!covers.empty()) covers += ", ";
    covers += L.element_name(c.lower) + "<" + L.element_name(c.upper);
  }
  f.add("covers", covers);
  const auto ideals = all_ideals(L);
  f.add("ideals", std::to_string(ideals.size()));
  for (const auto& I : ideals) f.add("ideal", L.format(I.members));
  const auto filters = all_filters(L);
  f.add("filters", std::to_string(filters.size()));
  for (const auto& F : filters) f.add("filter", L.format(F.members));
  const auto primes = prime_ideals(L);
  f.add("prime ideals", std::to_string(primes.size()));
  for (const auto& P : primes) f.add("prime ideal", L.format(P.members));
  const auto d = is_distributive(L);
  if (d.distributive) {
    f.add("distributive", "yes");
  } else {
    const auto& s = *d.sublattice;
    ElemSet members;
    for (Elem e : s.elements) members.insert(e);
    f.add("distributive", std::string("no (") + (s.kind == ForbiddenSublattice::Kind::M5 ? "M5" : "N5") + " sublattice)");
    f.add("forbidden sublattice", L.format(members));
  }
  f.print(structured);
  return 0;
}

void write_dot(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
  out << text;
}

int cmd_spec(const std::string& file, bool classical, const std::string& dot, bool structured) {
  const FiniteLattice L = load_lattice(file);
  Fields f;
  f.add("lattice", L.name());
  if (classical) {
    const ClassicalSpectrum C(L);
    f.add("points", std::to_string(C.size()));
    for (Point p = 0; p < C.size(); ++p) f.add("p" + std::to_string(p), C.point_names()[p]);
    for (Elem x = 0; x < L.size(); ++x) f.add("d(" + L.element_name(x) + ")", format_set(C.dmap(x), C.point_names()));
    f.add("opens", std::to_string(C.space().opens().size()));
    f.add("basis property", yes_no(C.basis_property()));
    if (!dot.empty()) write_dot(dot, to_dot(C));
  } else {
    const BitopSpectrum S(L);
    const BitopSpace& X = S.space();
    f.add("points", std::to_string(S.size()));
    for (Point p = 0; p < S.size(); ++p) f.add("p" + std::to_string(p), S.point_name(p));
    for (Elem x = 0; x < L.size(); ++x) {
      f.add("delta(" + L.element_name(x) + ")", X.format(S.delta(x)));
      f.add("epsilon(" + L.element_name(x) + ")", X.format(S.epsilon(x)));
    }
    f.add("tau opens", std::to_string(X.tau().opens().size()));
    f.add("sigma opens", std::to_string(X.sigma().opens().size()));
    f.add("tau == sigma", yes_no(X.tau() == X.sigma()));
    if (!dot.empty()) write_dot(dot, to_dot(S));
  }
  // DOT on stdout replaces the field listing so the output stays parseable.
  if (dot != "-") f.print(structured);
  return 0;
}

struct FaultSpec {
  std::vector<std::string> names;  // X Y Z: meet(X, Y) := Z
};

FiniteLattice inject(const FiniteLattice& L, const FaultSpec& fault, Report& report) {
  if (fault.names.empty()) return L;
  const auto x = L.find(fault.names[0]);
  const auto y = L.find(fault.names[1]);
  const auto z = L.find(fault.names[2]);
  if (!x || !y || !z) return L;
  report.note("fault: meet(" + fault.names[0] + ", " + fault.names[1] + ") := " + fault.names[2] + " in " + L.name());
  return L.with_meet_entry(*x, *y, *z);
}

int cmd_verify(const std::vector<std::string>& files, bool use_catalog, int exhaustive,
               const std::vector<std::uint64_t>& random, std::size_t random_max, const FaultSpec& fault,
               bool structured) {
  Report report;
  std::vector<FiniteLattice> lattices;
  std::vector<FiniteLattice> corpus_source;
  for (const auto& file : files) lattices.push_back(load_lattice(file));
  if (use_catalog) {
    for (auto& L : catalog()) {
      if (L.size() <= 4) corpus_source.push_back(L);
      lattices.push_back(std::move(L));
    }
  }
  if (exhaustive > 0) {
    GeneratorConfig cfg;
    cfg.max_size = static_cast<std::size_t>(exhaustive);
    const auto found = enumerate_lattices(cfg);
    report.note("lattices: " + std::to_string(found.size()) + " (exhaustive, sizes 1.." + std::to_string(exhaustive) +
                ")");
    for (const auto& L : found) {
      if (L.size() <= 4) corpus_source.push_back(L);
      lattices.push_back(L);
    }
  }
  if (!random.empty()) {
    GeneratorConfig cfg;
    cfg.mode = GeneratorConfig::Mode::Random;
    cfg.seed = random[0];
    cfg.count = static_cast<std::size_t>(random[1]);
    cfg.max_size = random_max;
    const auto found = enumerate_lattices(cfg);
    report.note("lattices: " + std::to_string(found.size()) + " (random, seed " + std::to_string(random[0]) + ")");
    for (const auto& L : found) lattices.push_back(L);
  }
  if (lattices.empty()) throw Error(ErrorKind::EmptyInput, "nothing to verify");
  for (auto& L : lattices) L = inject(L, fault, report);
  report.merge(verify_lattices(lattices));
  if (!corpus_source.empty() && fault.names.empty()) report.merge(verify_morphisms(corpus_source));
  std::cout << (structured ? report.render_json() : report.render_text());
  return report.exit_code();
}

int cmd_hom(const std::string& hom_file, const std::string& src_file, const std::string& tgt_file, bool structured) {
  const LatticePtr src = share(load_lattice(src_file));
  const LatticePtr tgt = share(load_lattice(tgt_file));
  const LatticeHom f = parse_hom(read_file(hom_file), src, tgt);
  const auto c = classify_hom(f);
  Report report;
  const std::string who = parse_hom_doc(read_file(hom_file)).name;
  if (c.is_proper) {
    report.note(std::string("proper: yes") + (c.vacuously_proper ? " (vacuous)" : ""));
  } else {
    report.note("proper: no (" + c.witness + ")");
  }
  if (c.is_quasi_proper) {
    report.note("quasi-proper: yes");
  } else {
    const auto& p = *c.quasi_proper_witness;
    report.note("quasi-proper: no (preimage of " + format_pair(*tgt, p) + " is (" + src->format(f.preimage(p.ideal)) +
                ";" + src->format(f.preimage(p.filter)) + "))");
  }
  report.check(who, "QuasiProperImpliesProper", !c.is_quasi_proper || c.is_proper,
               c.is_quasi_proper && !c.is_proper ? c.witness : "");
  if (c.is_quasi_proper) {
    const auto m = spec_b_on_hom(f);
    report.check(who, "SpecBMorphism", m.valid(), m.failure.value_or(""));
    const auto e = essential_functor_on_morphism(m.morphism);
    report.check(who, "EssentialFunctor", e.valid(), e.failure.value_or(""));
    const auto n = delta_natural_iso_check(f);
    report.check(who, "DeltaNaturality", n.holds(), n.failure.value_or(""));
    if (is_distributive(*src).distributive && is_distributive(*tgt).distributive && c.is_proper) {
      const auto b = b_natural_check(f);
      std::string why;
      if (!b.b_source_homeomorphism) why = "b is not a homeomorphism on the source";
      else if (!b.b_target_homeomorphism) why = "b is not a homeomorphism on the target";
      else if (!b.square_commutes) why = "b square does not commute";
      report.check(who, "NatIso", b.holds(), why);
    }
  }
  std::cout << (structured ? report.render_json() : report.render_text());
  return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite lattices, their bitopological spectra, and duality checks"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "structured"}));

  std::string show_file;
  auto* show = app.add_subcommand("show", "Elements, covers, ideals, filters, prime ideals, distributivity");
  show->add_option("file", show_file, "Lattice file")->required();

  std::string spec_file;
  std::string dot_out;
  bool classical = false;
  bool bitop = false;
  auto* spec = app.add_subcommand("spec", "Classical or bitopological spectrum");
  spec->add_option("file", spec_file, "Lattice file")->required();
  auto* cl = spec->add_flag("--classical", classical, "Prime-ideal spectrum with the Zariski topology");
  auto* bt = spec->add_flag("--bitop", bitop, "Comaximal-pair spectrum (default)");
  cl->excludes(bt);
  spec->add_option("--dot", dot_out, "Write a DOT graph to this path ('-' for stdout)");

  std::vector<std::string> verify_files;
  bool use_catalog = false;
  int exhaustive = 0;
  std::vector<std::uint64_t> random;
  std::size_t random_max = 7;
  std::vector<std::string> fault;
  auto* verify = app.add_subcommand("verify", "Run every property suite");
  verify->add_option("files", verify_files, "Lattice files");
  verify->add_flag("--catalog", use_catalog, "Verify the built-in catalog");
  verify->add_option("--exhaustive", exhaustive, "All lattices with at most N elements")
      ->check(CLI::Range(1, static_cast<int>(kExhaustiveSizeLimit)));
  verify->add_option("--random", random, "SEED COUNT")->expected(2);
  verify->add_option("--random-max-size", random_max, "Largest random lattice")
      ->check(CLI::Range(std::size_t{1}, kRandomSizeLimit));
  verify->add_option("--inject-meet-fault", fault, "X Y Z: overwrite meet(X, Y) with Z before verifying")
      ->expected(3);

  std::string hom_file;
  std::string src_file;
  std::string tgt_file;
  auto* hom = app.add_subcommand("hom", "Classify a homomorphism and check its functorial images");
  hom->add_option("homfile", hom_file, "Homomorphism file")->required();
  hom->add_option("source", src_file, "Source lattice file")->required();
  hom->add_option("target", tgt_file, "Target lattice file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }
  const bool structured = format == "structured";
  try {
    if (*show) return cmd_show(show_file, structured);
    if (*spec) return cmd_spec(spec_file, classical, dot_out, structured);
    if (*verify) {
      return cmd_verify(verify_files, use_catalog, exhaustive, random, random_max, FaultSpec{fault}, structured);
    }
    if (*hom) return cmd_hom(hom_file, src_file, tgt_file, structured);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
