#include "modseries/cli.hpp"

#include <CLI11.hpp>

#include <optional>
#include <sstream>
#include <variant>

#include "modseries/direct_sum.hpp"
#include "modseries/error.hpp"
#include "modseries/io.hpp"

namespace modseries::cli {

namespace {

struct Context {
  SearchOptions opts;
  std::ostream& out;
};

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse:
    case ErrorKind::field:
    case ErrorKind::shape:
    case ErrorKind::range:
      return kParse;
    case ErrorKind::resource:
      return kResource;
    case ErrorKind::series_validation:
      return kSeriesValidation;
    case ErrorKind::precondition:
    case ErrorKind::invalid_submodule:
    case ErrorKind::degenerate_input:
    case ErrorKind::unsupported_input:
    case ErrorKind::incomparable_label:
      return kPrecondition;
    case ErrorKind::internal:
      return kInternal;
  }
  return kInternal;
}

ModuleRep load_module(const std::string& path) { return io::parse_module(io::read_file(path)); }

NormalSeries load_series(const std::string& path, const ModuleRep& rep) {
  return io::parse_series(io::read_file(path), rep);
}

std::vector<SubspaceBasis> load_subspaces(const std::string& path, const ModuleRep& rep) {
  return io::parse_subspaces(io::read_file(path), rep.field(), rep.dim());
}

void print_matrix(std::ostream& out, const std::string& name, const Mat& m) {
  out << name << " rows=" << m.rows() << " cols=" << m.cols() << "\n" << io::render_matrix(m);
}

void print_pairing(std::ostream& out, const SeriesPairing& pairing) {
  out << "pairs: " << pairing.pairs.size() << "\n";
  for (const SeriesPairing::Pair& p : pairing.pairs)
    out << "pair first=" << p.first << " second=" << p.second << " dim=" << p.witness.matrix.rows() << "\n"
        << io::render_matrix(p.witness.matrix);
}

// Groups simple factors into isomorphism classes; returns the class of each.
std::vector<std::size_t> classify_factors(const FactorList& fs, std::vector<std::size_t>& class_rep) {
  std::vector<std::size_t> cls(fs.size());
  for (std::size_t i = 0; i < fs.size(); ++i) {
    std::size_t c = 0;
    while (c < class_rep.size() &&
           !simple_isomorphism(fs[class_rep[c]].factor.quotient, fs[i].factor.quotient))
      ++c;
    if (c == class_rep.size()) class_rep.push_back(i);
    cls[i] = c;
  }
  return cls;
}

int cmd_validate(Context& ctx, const std::string& module_path, const std::string& series_path) {
  const ModuleData data = io::parse_module_data(io::read_file(module_path));
  const ValidationReport report = validate_module(data);
  if (!report.ok()) {
    ctx.out << "RESULT: fail\n";
    for (const Issue& i : report.issues) ctx.out << i.clause << " error: " << i.message << "\n";
    return kParse;
  }
  const ModuleRep rep = ModuleRep::from_data(data);
  std::ostringstream body;
  body << "module: p=" << rep.field().modulus() << " dim=" << rep.dim() << " gens=" << rep.gen_count() << "\n";
  for (const std::string& n : report.notes) body << "note: " << n << "\n";
  if (!series_path.empty()) {
    const NormalSeries s = load_series(series_path, rep);
    const ValidationReport sr = validate_normal_series(s);
    body << "series: terms=" << s.length() << "\n";
    if (!sr.ok()) {
      ctx.out << "RESULT: fail\n" << body.str();
      for (const Issue& i : sr.issues) ctx.out << i.clause << ": " << i.message << "\n";
      return kSeriesValidation;
    }
  }
  ctx.out << "RESULT: ok\n" << body.str();
  return kOk;
}

int cmd_simple(Context& ctx, const std::string& module_path) {
  const ModuleRep rep = load_module(module_path);
  ctx.out << "RESULT: " << (is_simple(rep, ctx.opts) ? "simple" : "not-simple") << "\n";
  return kOk;
}

int cmd_minimal(Context& ctx, const std::string& module_path) {
  const ModuleRep rep = load_module(module_path);
  ctx.out << "RESULT: ok\n" << io::render_subspace(minimal_submodule(rep, ctx.opts).basis());
  return kOk;
}

int cmd_spin(Context& ctx, const std::string& module_path, const std::string& seeds_path) {
  const ModuleRep rep = load_module(module_path);
  std::vector<Vec> seeds;
  for (const SubspaceBasis& s : load_subspaces(seeds_path, rep))
    seeds.insert(seeds.end(), s.rows().begin(), s.rows().end());
  ctx.out << "RESULT: ok\n" << io::render_subspace(spin(rep, seeds).basis());
  return kOk;
}

int cmd_quotient(Context& ctx, const std::string& module_path, const std::string& sub_path) {
  const ModuleRep rep = load_module(module_path);
  const std::vector<SubspaceBasis> subs = load_subspaces(sub_path, rep);
  if (subs.size() != 1) throw Error(ErrorKind::parse, "expected exactly one subspace block");
  const QuotientRep q = quotient(rep, Submodule(rep, subs.front()));
  ctx.out << "RESULT: ok\n" << "divisor-dim: " << q.divisor.dim() << "\n" << io::render_module(q.quotient);
  print_matrix(ctx.out, "projection", q.projection);
  print_matrix(ctx.out, "section", q.section);
  return kOk;
}

int cmd_hom(Context& ctx, const std::string& src_path, const std::string& dst_path) {
  const ModuleRep src = load_module(src_path);
  const ModuleRep dst = load_module(dst_path);
  const std::vector<Mat> basis = hom_space(src, dst);
  ctx.out << "RESULT: ok\ndim: " << basis.size() << "\n";
  for (std::size_t i = 0; i < basis.size(); ++i) print_matrix(ctx.out, "basis " + std::to_string(i), basis[i]);
  return kOk;
}

int cmd_iso(Context& ctx, const std::string& src_path, const std::string& dst_path) {
  const ModuleRep src = load_module(src_path);
  const ModuleRep dst = load_module(dst_path);
  const std::optional<IsoWitness> w = is_isomorphic(src, dst, ctx.opts);
  ctx.out << "RESULT: " << (w ? "isomorphic" : "not-isomorphic") << "\n";
  if (w) print_matrix(ctx.out, "witness", w->matrix);
  return kOk;
}

int cmd_compose(Context& ctx, const std::string& module_path) {
  const ModuleRep rep = load_module(module_path);
  const NormalSeries s = composition_series(rep, ctx.opts);
  const FactorList fs = factors(s);
  std::vector<std::size_t> class_rep;
  const std::vector<std::size_t> cls = classify_factors(fs, class_rep);
  ctx.out << "RESULT: ok\nlength: " << s.length() << "\n";
  for (std::size_t i = 0; i < fs.size(); ++i)
    ctx.out << "factor " << i << ": dim=" << fs[i].factor.quotient.dim() << " class=" << cls[i] << "\n";
  ctx.out << "classes: " << class_rep.size() << "\n";
  for (std::size_t c = 0; c < class_rep.size(); ++c)
    ctx.out << "class " << c << ": size=" << std::count(cls.begin(), cls.end(), c)
            << " dim=" << fs[class_rep[c]].factor.quotient.dim() << "\n";
  ctx.out << io::render_series(s);
  return kOk;
}

int cmd_factors(Context& ctx, const std::string& module_path, const std::string& series_path) {
  const ModuleRep rep = load_module(module_path);
  const FactorList fs = factors(load_series(series_path, rep));
  ctx.out << "RESULT: ok\nfactors: " << fs.size() << "\n";
  for (std::size_t i = 0; i < fs.size(); ++i)
    ctx.out << "factor " << i << ":\n" << io::render_module(fs[i].factor.quotient);
  return kOk;
}

int cmd_jh(Context& ctx, const std::string& module_path, const std::string& first, const std::string& second) {
  const ModuleRep rep = load_module(module_path);
  const NormalSeries s = load_series(first, rep);
  const NormalSeries t = load_series(second, rep);
  const JordanHolderResult result = jordan_holder_check(s, t, ctx.opts);
  if (const auto* mismatch = std::get_if<ClassMismatch>(&result)) {
    ctx.out << "RESULT: fail\nmismatch: class of factor " << mismatch->representative << " in the "
            << (mismatch->representative_in_first ? "first" : "second") << " series (dim "
            << mismatch->factor_dim << "): " << mismatch->count_first << " in first, " << mismatch->count_second
            << " in second\n";
    return kInternal;
  }
  ctx.out << "RESULT: ok\n";
  print_pairing(ctx.out, std::get<SeriesPairing>(result));
  return kOk;
}

int cmd_refine(Context& ctx, const std::string& module_path, const std::string& first, const std::string& second) {
  const ModuleRep rep = load_module(module_path);
  const SchreierResult r = schreier_refine(load_series(first, rep), load_series(second, rep));
  ctx.out << "RESULT: ok\nlength: " << r.first.length() << "\n";
  print_pairing(ctx.out, r.pairing);
  ctx.out << io::render_series(r.first) << io::render_series(r.second);
  return kOk;
}

int cmd_unrefinable(Context& ctx, const std::string& module_path, const std::string& series_path) {
  const ModuleRep rep = load_module(module_path);
  const bool result = is_unrefinable(load_series(series_path, rep), ctx.opts);
  ctx.out << "RESULT: " << (result ? "unrefinable" : "refinable") << "\n";
  return kOk;
}

int cmd_zassenhaus(Context& ctx, const std::string& module_path, const std::string& blocks_path) {
  const ModuleRep rep = load_module(module_path);
  const std::vector<SubspaceBasis> blocks = load_subspaces(blocks_path, rep);
  if (blocks.size() != 4)
    throw Error(ErrorKind::parse, "expected four subspace blocks (Ut, U, Wt, W), got " + std::to_string(blocks.size()));
  const ButterflyResult b = zassenhaus_witness(Submodule(rep, blocks[0]), Submodule(rep, blocks[1]),
                                               Submodule(rep, blocks[2]), Submodule(rep, blocks[3]));
  ctx.out << "RESULT: ok\n"
          << "left-dim: " << b.left.factor.quotient.dim() << "\n"
          << "right-dim: " << b.right.factor.quotient.dim() << "\n"
          << "kernel:\n"
          << io::render_subspace(b.common_kernel);
  print_matrix(ctx.out, "witness", b.witness.matrix);
  return kOk;
}

int cmd_sum(Context& ctx, const std::vector<std::string>& paths) {
  std::vector<ModuleRep> parts;
  for (const std::string& p : paths) parts.push_back(load_module(p));
  const SumDecomposition dec = external_direct_sum(parts, ctx.opts);
  const NormalSeries s = canonical_sum_series(dec, ctx.opts);
  ctx.out << "RESULT: ok\nparts: " << parts.size() << "\n";
  std::size_t offset = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    ctx.out << "part " << i << ": dim=" << parts[i].dim() << " offset=" << offset << "\n";
    offset += parts[i].dim();
  }
  ctx.out << io::render_module(dec.total()) << io::render_series(s);
  return kOk;
}

int cmd_symbolic_iso(Context& ctx, const std::string& a, const std::string& b, const std::string& label) {
  const SymbolicSumSeries x{parse_ordinal(a), label, std::nullopt};
  const SymbolicSumSeries y{parse_ordinal(b), label, std::nullopt};
  for (const SymbolicSumSeries* s : {&x, &y}) {
    const SymbolicSeriesReport r = validate_symbolic_series(*s, ctx.opts);
    if (!r.validation.ok())
      throw Error(ErrorKind::precondition, "length " + to_string(s->length) + ": " + r.validation.issues.front().message);
  }
  ctx.out << "RESULT: " << (symbolic_iso(x, y) ? "isomorphic" : "distinct") << "\n"
          << "length-a: " << to_string(x.length) << "\n"
          << "length-b: " << to_string(y.length) << "\n"
          << "cardinality-a: " << to_string(cardinality(x.length)) << "\n"
          << "cardinality-b: " << to_string(cardinality(y.length)) << "\n";
  return kOk;
}

const char* kind_name(const Ordinal& o) {
  return o.is_zero() ? "zero" : is_limit(o) ? "limit" : "successor";
}

int cmd_ordinal(Context& ctx, const std::string& a_text, const std::string& b_text) {
  const Ordinal a = parse_ordinal(a_text);
  const Ordinal b = parse_ordinal(b_text);
  const auto c = a <=> b;
  ctx.out << "RESULT: " << (c < 0 ? "less" : c > 0 ? "greater" : "equal") << "\n"
          << "a: " << to_string(a) << " kind=" << kind_name(a) << " cardinality=" << to_string(cardinality(a)) << "\n"
          << "b: " << to_string(b) << " kind=" << kind_name(b) << " cardinality=" << to_string(cardinality(b)) << "\n"
          << "a+b: " << to_string(add(a, b)) << "\n"
          << "b+a: " << to_string(add(b, a)) << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Composition series, refinements and isomorphisms of modules over prime fields", "modseries"};
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  std::uint64_t max_enum = 4096;
  app.add_option("--seed", seed, "seed for randomized searches")->capture_default_str();
  app.add_option("--max-enum", max_enum, "largest p^dim searched exhaustively")->capture_default_str();
  app.fallthrough();

  std::string module_path, second_path, third_path, label = "U";
  std::vector<std::string> paths;

  auto* validate = app.add_subcommand("validate", "check a module file and optionally a series file");
  validate->add_option("module", module_path)->required();
  validate->add_option("series", second_path);
  auto* simple = app.add_subcommand("simple", "decide simplicity");
  simple->add_option("module", module_path)->required();
  auto* minimal = app.add_subcommand("minimal", "least-dimensional nonzero submodule");
  minimal->add_option("module", module_path)->required();
  auto* spin_cmd = app.add_subcommand("spin", "submodule generated by the rows of subspace blocks");
  spin_cmd->add_option("module", module_path)->required();
  spin_cmd->add_option("seeds", second_path)->required();
  auto* quotient_cmd = app.add_subcommand("quotient", "quotient by a submodule");
  quotient_cmd->add_option("module", module_path)->required();
  quotient_cmd->add_option("subspace", second_path)->required();
  auto* hom = app.add_subcommand("hom", "basis of the intertwiner space");
  hom->add_option("source", module_path)->required();
  hom->add_option("target", second_path)->required();
  auto* iso = app.add_subcommand("iso", "search for a module isomorphism");
  iso->add_option("source", module_path)->required();
  iso->add_option("target", second_path)->required();
  auto* compose = app.add_subcommand("compose", "composition series and factor classes");
  compose->add_option("module", module_path)->required();
  auto* factors_cmd = app.add_subcommand("factors", "factor modules of a series");
  factors_cmd->add_option("module", module_path)->required();
  factors_cmd->add_option("series", second_path)->required();
  auto* jh = app.add_subcommand("jh", "match the factors of two composition series");
  jh->add_option("module", module_path)->required();
  jh->add_option("first", second_path)->required();
  jh->add_option("second", third_path)->required();
  auto* refine = app.add_subcommand("refine", "isomorphic refinements of two normal series");
  refine->add_option("module", module_path)->required();
  refine->add_option("first", second_path)->required();
  refine->add_option("second", third_path)->required();
  auto* unrefinable = app.add_subcommand("unrefinable", "check that a series admits no proper refinement");
  unrefinable->add_option("module", module_path)->required();
  unrefinable->add_option("series", second_path)->required();
  auto* zassenhaus = app.add_subcommand("zassenhaus", "butterfly isomorphism for subspace blocks Ut, U, Wt, W");
  zassenhaus->add_option("module", module_path)->required();
  zassenhaus->add_option("blocks", second_path)->required();
  auto* sum = app.add_subcommand("sum", "external direct sum and its canonical series");
  sum->add_option("modules", paths)->required();
  auto* symbolic = app.add_subcommand("symbolic-iso", "compare n·U and m·U for ordinal lengths");
  symbolic->add_option("n", module_path)->required();
  symbolic->add_option("m", second_path)->required();
  symbolic->add_option("--label", label, "name of the simple module");
  auto* ordinal = app.add_subcommand("ordinal", "compare and add two ordinals");
  ordinal->add_option("a", module_path)->required();
  ordinal->add_option("b", second_path)->required();

  std::vector<const char*> argv{"modseries"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    out << "RESULT: fail\nusage error: " << e.what() << "\n";
    return kParse;
  }

  Context ctx{SearchOptions{}, out};
  ctx.opts.seed = seed;
  ctx.opts.max_enum = max_enum;
  std::ostringstream buffer;
  Context buffered{ctx.opts, buffer};
  try {
    int code = kOk;
    if (*validate) code = cmd_validate(buffered, module_path, second_path);
    else if (*simple) code = cmd_simple(buffered, module_path);
    else if (*minimal) code = cmd_minimal(buffered, module_path);
    else if (*spin_cmd) code = cmd_spin(buffered, module_path, second_path);
    else if (*quotient_cmd) code = cmd_quotient(buffered, module_path, second_path);
    else if (*hom) code = cmd_hom(buffered, module_path, second_path);
    else if (*iso) code = cmd_iso(buffered, module_path, second_path);
    else if (*compose) code = cmd_compose(buffered, module_path);
    else if (*factors_cmd) code = cmd_factors(buffered, module_path, second_path);
    else if (*jh) code = cmd_jh(buffered, module_path, second_path, third_path);
    else if (*refine) code = cmd_refine(buffered, module_path, second_path, third_path);
    else if (*unrefinable) code = cmd_unrefinable(buffered, module_path, second_path);
    else if (*zassenhaus) code = cmd_zassenhaus(buffered, module_path, second_path);
    else if (*sum) code = cmd_sum(buffered, paths);
    else if (*symbolic) code = cmd_symbolic_iso(buffered, module_path, second_path, label);
    else if (*ordinal) code = cmd_ordinal(buffered, module_path, second_path);
    out << buffer.str();
    return code;
  } catch (const Error& e) {
    // Partial output is discarded so a failure report is always whole.
    out << "RESULT: fail\n" << e.what() << "\n";
    return exit_code(e.kind());
  }
}

}  // namespace modseries::cli
