#include "regtess/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <unistd.h>

#include "CLI11.hpp"

#include "regtess/criterion.hpp"
#include "regtess/errors.hpp"
#include "regtess/hgeom.hpp"
#include "regtess/render.hpp"
#include "regtess/serialize.hpp"
#include "regtess/tess.hpp"

namespace regtess::cli {

namespace {

using serialize::Json;

struct Outcome {
  ExitCode code = ExitCode::ok;
  std::string message;
  std::string payload;
};

class IoFailure : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

char const *status_name(ExitCode code)
{
  switch (code) {
  case ExitCode::ok:
    return "ok";
  case ExitCode::not_realizable:
    return "not-realizable";
  case ExitCode::invalid_input:
    return "invalid-input";
  case ExitCode::verification_failed:
    return "verification-failed";
  case ExitCode::io_error:
    return "io-error";
  }
  return "unknown";
}

std::string one_line(std::string s)
{
  std::replace(s.begin(), s.end(), '\n', ' ');
  while (!s.empty() && s.back() == ' ')
    s.pop_back();
  return s;
}

void write_atomically(std::string const &path, std::string const &data)
{
  namespace fs = std::filesystem;
  fs::path const target(path);
  auto tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());

  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f)
      throw IoFailure("cannot open " + tmp.string() + " for writing");
    f << data;
    f.flush();
    if (!f)
      throw IoFailure("write to " + tmp.string() + " failed");
  }

  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoFailure("cannot move output into place at " + path);
  }
}

unsigned depth_cap(Command c)
{
  return c == Command::verify ? tess::kFreenessDepthCap : tess::kPatchDepthCap;
}

/// Validates the RunConfig invariants shared by every command.
criterion::TessellationType validated_type(RunConfig const &cfg)
{
  auto const type = criterion::TessellationType::make(cfg.p, cfg.q);
  if (cfg.depth > depth_cap(cfg.command))
    throw LimitExceeded("depth " + std::to_string(cfg.depth) +
                        " exceeds the cap of " +
                        std::to_string(depth_cap(cfg.command)));
  if (cfg.m) {
    auto const m = *cfg.m;
    if (m < 2 || m > cfg.p)
      throw InvalidInput("--m must satisfy 2 <= m <= p (m=" +
                         std::to_string(m) + ", p=" + std::to_string(cfg.p) +
                         ")");
    if (cfg.q % m != 0)
      throw InvalidInput("--m must divide q (m=" + std::to_string(m) +
                         ", q=" + std::to_string(cfg.q) + ")");
  }
  return type;
}

std::string finish(Json const &j) { return serialize::dump(j) + "\n"; }

Outcome cmd_decide(RunConfig const &cfg)
{
  auto const type = validated_type(cfg);
  auto const prime = criterion::qualifying_prime(type);
  auto const spf = criterion::smallest_prime_factor(type.q());

  Outcome o;
  o.code = prime ? ExitCode::ok : ExitCode::not_realizable;
  o.message = prime ? "realizable: prime " + std::to_string(*prime) +
                          " divides q and is <= p"
                    : "not realizable: smallest prime factor of q is " +
                          std::to_string(spf) + " > p";

  if (cfg.format == Format::json) {
    Json j;
    j["p"] = type.p();
    j["q"] = type.q();
    j["realizable"] = prime.has_value();
    j["prime"] = prime ? Json(*prime) : Json(nullptr);
    o.payload = finish(j);
  } else {
    o.payload = "{" + std::to_string(type.p()) + "," +
                std::to_string(type.q()) + "}: " + o.message + "\n";
  }
  return o;
}

std::string witness_text(unsigned p, unsigned q,
                         std::optional<criterion::Witness> const &w)
{
  std::ostringstream s;
  s << "{" << p << "," << q << "}: ";
  if (!w) {
    s << "no involution sigma with (sigma rho)^q = 1\n";
    return s.str();
  }
  s << "sigma = " << perm::to_cycle_string(w->sigma)
    << ", sigma rho = " << perm::to_cycle_string(w->sigma_rho())
    << ", m = " << w->m << "\n";
  return s.str();
}

/// Witness for cfg: --m if given, else the smallest divisor of q in [2, p].
std::optional<criterion::Witness> default_witness(RunConfig const &cfg,
                                                criterion::TessellationType t)
{
  if (cfg.m)
    return criterion::construct_sigma(t.p(), static_cast<unsigned>(*cfg.m));
  if (auto const prime = criterion::qualifying_prime(t))
    return criterion::construct_sigma(t.p(), *prime);
  return std::nullopt;
}

Outcome cmd_sigma(RunConfig const &cfg)
{
  auto const type = validated_type(cfg);
  auto const witness = default_witness(cfg, type);

  Outcome o;
  o.code = witness ? ExitCode::ok : ExitCode::not_realizable;
  o.message = witness ? "sigma = " + perm::to_cycle_string(witness->sigma) +
                            ", m = " + std::to_string(witness->m)
                      : "no divisor of q in [2,p]";
  o.payload = cfg.format == Format::json
                  ? finish(serialize::witness_json(type.p(), type.q(), witness))
                  : witness_text(type.p(), type.q(), witness);
  return o;
}

Outcome cmd_oracle(RunConfig const &cfg)
{
  auto const type = validated_type(cfg);
  auto const result = criterion::oracle_search_counted(type);

  Outcome o;
  o.code = result.witness ? ExitCode::ok : ExitCode::not_realizable;
  o.message = std::string(result.witness ? "witness found" : "no witness") +
              " after " + std::to_string(result.candidates_examined) +
              " candidates";
  if (cfg.format == Format::json) {
    o.payload =
        finish(serialize::witness_json(type.p(), type.q(), result.witness));
  } else {
    o.payload = witness_text(type.p(), type.q(), result.witness) +
                "candidates examined: " +
                std::to_string(result.candidates_examined) + "\n";
  }
  return o;
}

struct Check {
  std::string name;
  bool pass;
  double residual;
};

Outcome cmd_verify(RunConfig const &cfg)
{
  auto const type = validated_type(cfg);
  auto const witness = default_witness(cfg, type);
  if (!witness)
    return {ExitCode::not_realizable, "no divisor of q in [2,p]", ""};

  std::vector<Check> checks;
  auto const poly = hgeom::base_polygon(cfg.p, cfg.q);

  double angle_err = 0.0;
  for (unsigned k = 1; k <= type.p(); ++k)
    angle_err = std::max(angle_err,
                         std::abs(poly.interior_angle(k) -
                                  2.0 * std::numbers::pi / type.q()));
  checks.push_back(
      {"polygon-angles", angle_err < hgeom::kConstructionTol, angle_err});

  auto const pairing = tess::generators(poly, witness->sigma);
  auto const audit = tess::audit_pairing(pairing);
  checks.push_back({"edge-images",
                    audit.max_endpoint_error < hgeom::kConstructionTol,
                    audit.max_endpoint_error});
  checks.push_back({"inverse-law",
                    audit.max_inverse_error < hgeom::kIsometryEqualTol,
                    audit.max_inverse_error});

  for (unsigned i = 1; i <= type.p(); ++i) {
    auto const r = tess::vertex_relation_residual(pairing, type.q(), i);
    checks.push_back({"vertex-relation-" + std::to_string(i),
                      r < hgeom::kIsometryEqualTol, r});
  }

  auto const report = tess::freeness_check(pairing, cfg.depth);
  checks.push_back({"transitive", report.transitive_ok,
                    static_cast<double>(report.unmatched_reference_tiles)});
  checks.push_back(
      {"free", report.free_ok, report.max_coincidence_residual});
  bool const counts_equal =
      report.tile_counts.first == report.tile_counts.second;
  checks.push_back({"tile-counts", counts_equal,
                    std::abs(static_cast<double>(report.tile_counts.first) -
                             static_cast<double>(report.tile_counts.second))});

  bool const all_pass = std::all_of(checks.begin(), checks.end(),
                                    [](Check const &c) { return c.pass; });

  Outcome o;
  o.code = all_pass ? ExitCode::ok : ExitCode::verification_failed;
  double worst = 0.0;
  for (auto const &c : checks) {
    if (c.name != "transitive" && c.name != "tile-counts")
      worst = std::max(worst, c.residual);
  }
  std::ostringstream msg;
  msg << (all_pass ? "all checks passed" : "verification failed")
      << "; max residual " << worst;
  o.message = msg.str();

  if (cfg.format == Format::json) {
    Json j;
    j["p"] = type.p();
    j["q"] = type.q();
    j["depth"] = cfg.depth;
    j["witness"] = serialize::witness_json(type.p(), type.q(), witness);
    auto arr = Json::array();
    for (auto const &c : checks) {
      Json e;
      e["name"] = c.name;
      e["pass"] = c.pass;
      e["residual"] = c.residual;
      arr.push_back(std::move(e));
    }
    j["checks"] = std::move(arr);
    j["tile_counts"] = Json::array(
        {report.tile_counts.first, report.tile_counts.second});
    j["max_residual"] = worst;
    j["pass"] = all_pass;
    o.payload = finish(j);
  } else {
    std::ostringstream s;
    s << witness_text(type.p(), type.q(), witness);
    for (auto const &c : checks) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3e", c.residual);
      s << (c.pass ? "PASS " : "FAIL ") << c.name << " residual=" << buf
        << "\n";
    }
    s << "tiles: generated=" << report.tile_counts.first
      << " reference=" << report.tile_counts.second << "\n";
    o.payload = s.str();
  }
  return o;
}

Outcome cmd_render(RunConfig const &cfg)
{
  (void)validated_type(cfg);
  render::RenderStats stats;
  Outcome o;
  o.payload = render::render_svg(cfg.p, cfg.q, cfg.depth, &stats);
  o.message = "rendered " + std::to_string(stats.outlined_tiles) +
              " tiles, " + std::to_string(stats.filled_tiles) + " filled";
  return o;
}

RunConfig parse(std::vector<std::string> const &args)
{
  RunConfig cfg;
  std::string format = "json";
  std::string out;

  CLI::App app{"Regular {p,q} tessellations by fundamental domains",
               "regtess"};
  std::map<std::string, Command> const commands{
      {"decide", Command::decide}, {"sigma", Command::sigma},
      {"oracle", Command::oracle}, {"verify", Command::verify},
      {"render", Command::render}};

  app.add_option("command", cfg.command, "decide|sigma|oracle|verify|render")
      ->required()
      ->transform(CLI::CheckedTransformer(commands, CLI::ignore_case));
  app.add_option("p", cfg.p, "edges per polygon")->required();
  app.add_option("q", cfg.q, "polygons per vertex")->required();
  app.add_option("--m", cfg.m, "order of sigma rho (a divisor of q, <= p)");
  app.add_option("--depth", cfg.depth, "patch depth (default 2)");
  app.add_option("-o,--out", out, "output file (written atomically)");
  app.add_option("--format", format, "json|text")
      ->check(CLI::IsMember({"json", "text"}));

  // CLI11 consumes the vector from the back.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  app.parse(reversed);

  cfg.format = format == "text" ? Format::text : Format::json;
  if (!out.empty())
    cfg.out = out;
  return cfg;
}

Outcome dispatch(RunConfig const &cfg)
{
  switch (cfg.command) {
  case Command::decide:
    return cmd_decide(cfg);
  case Command::sigma:
    return cmd_sigma(cfg);
  case Command::oracle:
    return cmd_oracle(cfg);
  case Command::verify:
    return cmd_verify(cfg);
  case Command::render:
    return cmd_render(cfg);
  }
  return {ExitCode::invalid_input, "unknown command", ""};
}

} // namespace

int run(std::vector<std::string> const &args, std::ostream &out,
        std::ostream &err)
{
  Outcome o;
  try {
    auto const cfg = parse(args);
    o = dispatch(cfg);
    if (!o.payload.empty()) {
      if (cfg.out)
        write_atomically(*cfg.out, o.payload);
      else
        out << o.payload;
    }
  } catch (CLI::CallForHelp const &) {
    out << "usage: regtess <decide|sigma|oracle|verify|render> <p> <q> "
           "[--m M] [--depth N] [--out PATH] [--format json|text]\n";
    o = {ExitCode::ok, "help", ""};
  } catch (CLI::ParseError const &e) {
    o = {ExitCode::invalid_input, e.what(), ""};
  } catch (InvalidInput const &e) {
    o = {ExitCode::invalid_input, e.what(), ""};
  } catch (IoFailure const &e) {
    o = {ExitCode::io_error, e.what(), ""};
  } catch (InvalidWitness const &e) {
    o = {ExitCode::verification_failed, e.what(), ""};
  } catch (GeometryError const &e) {
    o = {ExitCode::verification_failed, e.what(), ""};
  } catch (std::exception const &e) {
    o = {ExitCode::verification_failed, std::string("internal error: ") +
                                            e.what(), ""};
  }

  err << "status=" << status_name(o.code)
      << " code=" << static_cast<int>(o.code)
      << " message=" << one_line(o.message) << "\n";
  return static_cast<int>(o.code);
}

} // namespace regtess::cli
