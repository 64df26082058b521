#include "commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "semihilbert/adjoint.hpp"
#include "semihilbert/error.hpp"
#include "semihilbert/matrix_file.hpp"
#include "semihilbert/numrange.hpp"
#include "semihilbert/random.hpp"
#include "semihilbert/verifier.hpp"

namespace semihilbert::cli {

namespace {

std::string format_complex(Complex z) { return "[" + format_number(z.real()) + ", " + format_number(z.imag()) + "]"; }

std::string format_vector(const ComplexVector& v) {
  std::string out = "[";
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    if (k > 0) out += ", ";
    out += format_complex(v(k));
  }
  return out + "]";
}

const char* format_bool(bool b) { return b ? "true" : "false"; }

struct Operands {
  SemiHilbertContext ctx;
  ComplexMatrix t;
};

Operands load(const std::string& a_path, const std::string& t_path, double tol) {
  const ComplexMatrix a = read_matrix_file(a_path);
  const ComplexMatrix t = read_matrix_file(t_path);
  SemiHilbertContext ctx(a, tol);
  ctx.require_operator(t);
  return {std::move(ctx), t};
}

int cmd_classify(const std::string& a_path, const std::string& t_path, double tol, std::ostream& out) {
  const Operands op = load(a_path, t_path, tol);
  const auto cls = classify(op.ctx, op.t);
  out << "in_semihilbert: " << format_bool(cls.in_semihilbert) << "\n";
  out << "violation_norm: " << format_number(cls.violation_norm) << "\n";
  out << "rank: " << op.ctx.rank() << "\n";
  return cls.in_semihilbert ? kExitOk : kExitMembership;
}

int cmd_radius(const std::string& a_path, const std::string& t_path, double tol, int grid, std::optional<double> gap,
               std::ostream& out) {
  const Operands op = load(a_path, t_path, tol);
  const RadiusEstimate est = a_radius(op.ctx, op.t, grid, gap);
  out << "lower: " << format_number(est.lower) << "\n";
  out << "upper: " << format_number(est.upper) << "\n";
  out << "midpoint: " << format_number(est.midpoint()) << "\n";
  out << "gap: " << format_number(est.gap) << "\n";
  out << "refinement_rounds: " << est.refinement_rounds << "\n";
  out << "degenerate: " << format_bool(est.degenerate) << "\n";
  out << "witness_angle: " << format_number(est.witness_angle) << "\n";
  out << "witness_vector: " << format_vector(est.witness_vector) << "\n";
  return kExitOk;
}

int cmd_range(const std::string& a_path, const std::string& t_path, double tol, int points,
              const std::string& out_path, std::ostream& out) {
  const Operands op = load(a_path, t_path, tol);
  const RangeBoundary boundary = a_range_boundary(op.ctx, op.t, points);
  std::ostringstream csv;
  csv << "theta,re,im\n";
  for (std::size_t k = 0; k < boundary.points.size(); ++k)
    csv << format_number(boundary.angles[k]) << ',' << format_number(boundary.points[k].real()) << ','
        << format_number(boundary.points[k].imag()) << '\n';
  if (out_path.empty()) {
    out << csv.str();
  } else {
    std::ofstream file(out_path);
    if (!file) throw Error(ErrorKind::Parse, "cannot write " + out_path);
    file << csv.str();
    out << "points: " << boundary.points.size() << "\n";
  }
  return kExitOk;
}

int cmd_adjoint(const std::string& a_path, const std::string& t_path, double tol, const std::string& out_path,
                std::ostream& out, std::ostream& err) {
  const Operands op = load(a_path, t_path, tol);
  const ComplexMatrix x = sharp(op.ctx, op.t);
  const double residual = adjoint_residual(op.ctx, op.t, x);
  if (out_path.empty()) {
    out << format_matrix_json(x);
    err << "residual: " << format_number(residual) << "\n";
  } else {
    write_matrix_file(out_path, x);
    out << "residual: " << format_number(residual) << "\n";
  }
  return kExitOk;
}

void print_verdict(const EquivalenceVerdict& v, std::ostream& out) {
  out << "outcome: " << to_string(v.outcome) << "\n";
  out << "proportional: " << format_bool(v.proportional) << "\n";
  out << "lambda: " << (v.lambda ? format_complex(*v.lambda) : std::string("absent")) << "\n";
  out << "lambda_modulus_error: " << format_number(v.lambda_modulus_error) << "\n";
  out << "residual: " << format_number(v.residual) << "\n";
  out << "compression_gap: " << format_number(v.compression_gap) << "\n";
  out << "max_radius_gap: " << format_number(v.max_radius_gap) << "\n";
  out << "trials_run: " << v.trials_run << "\n";
  if (v.witness) {
    out << "witness_x: " << format_vector(v.witness->x) << "\n";
    out << "witness_y: " << format_vector(v.witness->y) << "\n";
    out << "witness_gap: " << format_number(v.witness_gap) << "\n";
  } else {
    out << "witness: none\n";
  }
  if (v.range_evidence) {
    const auto& e = *v.range_evidence;
    out << "range_evidence_point: " << format_complex(e.point) << "\n";
    out << "range_evidence_side: " << (e.from_first ? "W_A(TR)" : "W_A(SR)") << "\n";
    out << "range_evidence_angle: " << format_number(e.angle) << "\n";
    out << "range_evidence_distance: " << format_number(e.distance) << "\n";
    out << "range_evidence_trial: " << e.trial << "\n";
  }
}

int exit_for(Outcome o) {
  switch (o) {
    case Outcome::Equivalent: return kExitOk;
    case Outcome::Separated: return kExitSeparated;
    case Outcome::Inconclusive: return kExitInconclusive;
  }
  return kExitInconclusive;
}

struct VerifyOptions {
  std::string a_path, t_path, s_path, mode = "product";
  CampaignConfig cfg;
};

int cmd_verify(const VerifyOptions& opt, std::ostream& out) {
  const Operands op = load(opt.a_path, opt.t_path, kDefaultContextTol);
  CampaignConfig cfg = opt.cfg;
  cfg.dimension = static_cast<int>(op.ctx.dimension());
  cfg.ensemble = Ensemble::Fixed;
  cfg.fixed_a = op.ctx.a();

  ComplexMatrix s;
  if (opt.mode == "identity") {
    s = ComplexMatrix::Identity(op.ctx.dimension(), op.ctx.dimension());
  } else {
    if (opt.s_path.empty()) throw Error(ErrorKind::Parse, "mode " + opt.mode + " needs an S file");
    s = read_matrix_file(opt.s_path);
    op.ctx.require_operator(s);
  }
  auto require_member = [&](const ComplexMatrix& m, const char* name) {
    const auto cls = classify(op.ctx, m);
    if (!cls.in_semihilbert)
      throw Error(ErrorKind::NotSemiHilbertian, std::string(name) + " is not in B_{A^{1/2}} (violation " +
                                                    format_number(cls.violation_norm) + ")");
  };
  require_member(op.t, "T");
  require_member(s, "S");

  EquivalenceVerdict v;
  std::optional<ProofReplayReport> replay;
  if (opt.mode == "product") {
    v = product_check(op.ctx, op.t, s, cfg);
  } else if (opt.mode == "rankone") {
    v = rankone_check(op.ctx, op.t, s, cfg);
    if (v.outcome == Outcome::Equivalent) replay = replay_theorem_proof(op.ctx, op.t, s, cfg);
  } else if (opt.mode == "range") {
    v = range_equality_check(op.ctx, op.t, s, cfg);
  } else if (opt.mode == "right") {
    v = right_multiplication_check(op.ctx, op.t, s, cfg);
  } else {
    v = identity_comparison_check(op.ctx, op.t, cfg);
  }

  out << "mode: " << opt.mode << "\n";
  out << "dimension: " << op.ctx.dimension() << "\n";
  out << "rank: " << op.ctx.rank() << "\n";
  out << "seed: " << cfg.seed << "\n";
  out << "trials: " << cfg.trials << "\n";
  out << "tol: " << format_number(cfg.tol) << "\n";
  out << "radius_gap: " << format_number(cfg.radius_gap) << "\n";
  print_verdict(v, out);
  if (replay) {
    out << "replay_samples: " << replay->samples << "\n";
    out << "replay_max_norm_gap: " << format_number(replay->max_norm_gap) << "\n";
    out << "replay_max_saturation_gap: " << format_number(replay->max_saturation_gap) << "\n";
    out << "replay_max_gram_det: " << format_number(replay->max_gram_det) << "\n";
    out << "replay_passed: " << format_bool(replay->passed) << "\n";
  }
  return exit_for(v.outcome);
}

struct GenOptions {
  int dim = 4;
  std::string ensemble = "invertible";
  std::uint64_t seed = 0;
  std::string out_prefix;
  std::string pair = "equivalent";
  double phase = 1.0;
};

int cmd_gen(const GenOptions& opt, std::ostream& out) {
  const auto ensemble = parse_ensemble(opt.ensemble);
  if (!ensemble || *ensemble == Ensemble::Fixed)
    throw Error(ErrorKind::Parse, "ensemble must be invertible or rank_deficient");
  CampaignConfig cfg;
  cfg.dimension = opt.dim;
  cfg.ensemble = *ensemble;
  cfg.seed = opt.seed;
  cfg.validate();

  Rng rng = substream(opt.seed, 0, 0);
  const ComplexMatrix a = generate_a(cfg, rng);
  const SemiHilbertContext ctx(a);
  const ComplexMatrix s = random_semihilbertian(ctx, rng);
  ComplexMatrix t;
  if (opt.pair == "equivalent")
    t = make_equivalent_pair(ctx, s, opt.phase, opt.seed);
  else if (opt.pair == "independent")
    t = random_semihilbertian(ctx, rng);
  else
    throw Error(ErrorKind::Parse, "pair must be equivalent or independent");

  const std::string prefix = opt.out_prefix;
  write_matrix_file(prefix + "A.json", a);
  write_matrix_file(prefix + "S.json", s);
  write_matrix_file(prefix + "T.json", t);
  out << "A: " << prefix << "A.json\nS: " << prefix << "S.json\nT: " << prefix << "T.json\n";
  out << "rank: " << ctx.rank() << "\n";
  return kExitOk;
}

int exit_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::NotSemiHilbertian:
    case ErrorKind::ZeroRank: return kExitMembership;
    default: return kExitUsage;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Semi-Hilbertian operator toolkit: A-seminorms, A-adjoints, A-numerical radii and ranges",
               "semihilbert"};
  app.require_subcommand(1);

  std::string a_path, t_path, s_path, out_path;
  double tol = kDefaultContextTol;
  int grid = kDefaultGrid;
  std::optional<double> gap;
  int points = 256;

  auto add_operands = [&](CLI::App* sub) {
    sub->add_option("A", a_path, "MatrixFile with the positive operator A")->required();
    sub->add_option("T", t_path, "MatrixFile with the operator T")->required();
  };

  auto* classify_cmd = app.add_subcommand("classify", "Decide whether T lies in B_{A^{1/2}}");
  add_operands(classify_cmd);
  classify_cmd->add_option("--tol", tol, "Membership tolerance");

  auto* radius_cmd = app.add_subcommand("radius", "Certified interval for w_A(T)");
  add_operands(radius_cmd);
  radius_cmd->add_option("--tol", tol, "Context tolerance");
  radius_cmd->add_option("--grid", grid, "Initial number of angles (>= 4)");
  radius_cmd->add_option("--gap", gap, "Certification gap (default 1e-6 (1 + sigma_max))");

  auto* range_cmd = app.add_subcommand("range", "Supporting points of W_A(T) as CSV theta,re,im");
  add_operands(range_cmd);
  range_cmd->add_option("--tol", tol, "Context tolerance");
  range_cmd->add_option("--points", points, "Number of angles");
  range_cmd->add_option("--out", out_path, "CSV output path (stdout when omitted)");

  auto* adjoint_cmd = app.add_subcommand("adjoint", "Reduced A-adjoint of T as a MatrixFile");
  add_operands(adjoint_cmd);
  adjoint_cmd->add_option("--tol", tol, "Context tolerance");
  adjoint_cmd->add_option("--out", out_path, "MatrixFile output path (stdout when omitted)");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check the radius/range equivalences for T and S");
  verify_cmd->add_option("A", verify.a_path)->required();
  verify_cmd->add_option("T", verify.t_path)->required();
  verify_cmd->add_option("S", verify.s_path, "Not needed in identity mode");
  verify_cmd->add_option("--mode", verify.mode)
      ->check(CLI::IsMember({"product", "rankone", "range", "right", "identity"}));
  verify_cmd->add_option("--trials", verify.cfg.trials)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", verify.cfg.seed);
  verify_cmd->add_option("--tol", verify.cfg.tol)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--gap", verify.cfg.radius_gap, "Certification gap for campaign radii")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--grid", verify.cfg.grid)->check(CLI::Range(4, 1 << 20));
  verify_cmd->add_option("--points", verify.cfg.boundary_points)->check(CLI::PositiveNumber);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a reproducible (A, S, T) instance");
  gen_cmd->add_option("--dim", gen.dim)->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--ensemble", gen.ensemble)->check(CLI::IsMember({"invertible", "rank_deficient"}));
  gen_cmd->add_option("--seed", gen.seed);
  gen_cmd->add_option("--out-prefix", gen.out_prefix)->required();
  gen_cmd->add_option("--pair", gen.pair)->check(CLI::IsMember({"equivalent", "independent"}));
  gen_cmd->add_option("--phase", gen.phase, "Unimodular factor angle for equivalent pairs");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (classify_cmd->parsed()) return cmd_classify(a_path, t_path, tol, out);
    if (radius_cmd->parsed()) return cmd_radius(a_path, t_path, tol, grid, gap, out);
    if (range_cmd->parsed()) return cmd_range(a_path, t_path, tol, points, out_path, out);
    if (adjoint_cmd->parsed()) return cmd_adjoint(a_path, t_path, tol, out_path, out, err);
    if (verify_cmd->parsed()) return cmd_verify(verify, out);
    if (gen_cmd->parsed()) return cmd_gen(gen, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (e.kind() == ErrorKind::NotSemiHilbertian)
      err << "T is outside B_{A^{1/2}}: w_A(T) may be +inf and is not computed\n";
    return exit_for(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace semihilbert::cli
