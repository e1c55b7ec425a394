#include "laxforge/shell.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unistd.h>

#include "CLI11.hpp"
#include "laxforge/error.hpp"

namespace fs = std::filesystem;

namespace laxforge {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

AlgebraPtr algebra_for(const JobConfig& cfg) { return build_algebra(cfg.m, cfg.n); }

std::string sanitize(std::string name) {
  for (char& c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '_') c = '_';
  }
  return name.empty() ? "rep" : name;
}

std::string tag(const JobConfig& cfg) { return std::to_string(cfg.m) + "_" + std::to_string(cfg.n); }

Rational parse_s(const JobConfig& cfg) {
  if (!cfg.s) throw InvalidInput("--s is required");
  const Rational s0 = parse_rational(*cfg.s);
  if (is_zero(s0)) throw InvalidInput("--s must be nonzero");
  return s0;
}

CheckReport merge(const std::string& name, const std::vector<CheckReport>& parts) {
  CheckReport out;
  out.check = name;
  bool all_vacuous = true;
  for (const auto& p : parts) {
    out.relations_checked += p.relations_checked;
    all_vacuous = all_vacuous && p.vacuous;
    if (!p.passed && out.passed) {
      out.passed = false;
      out.witness = p.witness;
    }
  }
  out.vacuous = all_vacuous && out.passed;
  return out;
}

// Lazily built inputs shared by the verify suites.
class VerifyContext {
 public:
  VerifyContext(const JobConfig& cfg) : cfg_(cfg), alg_(algebra_for(cfg)), w_(load_representation(cfg, alg_)) {}

  const AlgebraPtr& algebra() const { return alg_; }
  const RepresentationPtr& module() const { return w_; }
  bool module_is_vector() const { return w_->name == "vector" && cfg_.rep == "vector"; }

  const SigmaSet& sigma_w() {
    if (!sigma_w_) {
      if (cfg_.sigma_path) {
        sigma_w_ = sigma_from_json(parse_json(read_file(*cfg_.sigma_path)), w_);
        if (!sigma_w_->complete()) throw SchemaError("sigma file '" + *cfg_.sigma_path + "' is incomplete");
      } else {
        sigma_w_ = extend_sigma(init_simple_sigma(w_));
      }
    }
    return *sigma_w_;
  }

  const SigmaSet& sigma_v() {
    if (module_is_vector()) return sigma_w();
    if (!sigma_v_) {
      if (!vector_rep_) vector_rep_ = build_vector_rep(alg_);
      sigma_v_ = extend_sigma(init_simple_sigma(vector_rep_));
    }
    return *sigma_v_;
  }

  const RTensor& r_v() {
    if (!r_v_) r_v_ = assemble_R(sigma_v());
    return *r_v_;
  }

  const RTensor& r_w() {
    if (module_is_vector()) return r_v();
    if (!r_w_) r_w_ = assemble_R(sigma_w());
    return *r_w_;
  }

  const Representation& vector_rep() {
    return *sigma_v().rep;
  }

  CheckReport run(const std::string& suite) {
    if (suite == "ybe") return check_ybe(r_v());
    if (suite == "lax-ybe") return check_lax_ybe(r_v(), r_w());
    if (suite == "intertwine") return check_intertwining(r_v(), vector_rep());
    if (suite == "delta") return check_delta_property(sigma_w());
    if (suite == "qcom") return check_qcom(sigma_w());
    if (suite == "serre") return check_qserre(*w_);
    if (suite == "extra-serre") {
      // On small modules the nested adjoints vanish term by term; W (x) W gives the relation content.
      const SigmaSet on_tensor = extend_sigma(init_simple_sigma(tensor_module(*w_, *w_)));
      return merge(suite, {check_extra_serre(sigma_w()), check_extra_serre(on_tensor)});
    }
    if (suite == "appendix") return check_appendix(sigma_w());
    if (suite == "path-independence") return check_path_independence(sigma_w());
    if (suite == "opposite") {
      RTensor rT;
      rT.kind = RKind::opposite;
      rT.matrix = opposite_matrix(sigma_v());
      rT.v_dim = r_v().v_dim;
      rT.w_dim = r_v().w_dim;
      return check_opposite(r_v(), rT);
    }
    if (suite == "spectral-untwisted" || suite == "spectral-twisted") {
      const SpectralKind kind = suite == "spectral-untwisted" ? SpectralKind::untwisted : SpectralKind::twisted;
      const SpectralRMatrix r = build_spectral_R(alg_, kind, r_v().matrix, build_E_tensor(*alg_));
      return merge(suite, {check_spectral_identities(r, sigma_v()), check_spectral_ybe(r, cfg_.samples, cfg_.seed)});
    }
    throw InvalidInput("unknown suite '" + suite + "'");
  }

 private:
  const JobConfig& cfg_;
  AlgebraPtr alg_;
  RepresentationPtr w_;
  RepresentationPtr vector_rep_;
  std::optional<SigmaSet> sigma_w_, sigma_v_;
  std::optional<RTensor> r_v_, r_w_;
};

}  // namespace

std::string fingerprint(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream ss;
  ss << std::hex;
  ss.width(16);
  ss.fill('0');
  ss << h;
  return ss.str();
}

std::string rep_fingerprint(const Representation& rep) {
  return fingerprint(dump(algebra_to_json(*rep.algebra)) + dump(representation_to_json(rep)));
}

std::string resolve_cache_dir(const JobConfig& cfg) {
  if (cfg.cache_dir) return *cfg.cache_dir;
  if (const char* env = std::getenv("LAXFORGE_CACHE"); env && *env) return env;
  return (fs::path(cfg.out_dir) / ".laxforge-cache").string();
}

RepresentationPtr load_representation(const JobConfig& cfg, const AlgebraPtr& alg) {
  if (cfg.rep == "vector") return build_vector_rep(alg);
  if (cfg.rep == "trivial") return trivial_rep(alg);
  RepresentationPtr rep = representation_from_json(parse_json(read_file(cfg.rep)));
  if (rep->algebra->m != alg->m || rep->algebra->n != alg->n) {
    throw InvalidInput("module file '" + cfg.rep + "' is for osp(" + std::to_string(rep->algebra->m) + "|" +
                       std::to_string(rep->algebra->n) + "), not osp(" + std::to_string(alg->m) + "|" +
                       std::to_string(alg->n) + ")");
  }
  return rep;
}

LaurentPoly parse_z(const std::string& text) {
  std::string t;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  }
  if (t.find('q') == std::string::npos) return LaurentPoly::parse(t);
  int sign = 1;
  std::size_t i = 0;
  if (i < t.size() && (t[i] == '-' || t[i] == '+')) sign = t[i++] == '-' ? -1 : 1;
  if (i >= t.size() || t[i] != 'q') throw InvalidInput("cannot parse z = '" + text + "'");
  ++i;
  Rational e = 1;
  if (i < t.size()) {
    if (t[i] != '^') throw InvalidInput("cannot parse z = '" + text + "'");
    e = parse_rational(t.substr(i + 1));
  }
  return LaurentPoly(sign) * LaurentPoly::q_power(e);
}

void write_atomic(const std::string& path, const std::string& text) {
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  const fs::path tmp = target.string() + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InvalidInput("cannot write '" + tmp.string() + "'");
    out << text;
    if (!out) throw InvalidInput("cannot write '" + tmp.string() + "'");
  }
  fs::rename(tmp, target);
}

int cmd_generate(const JobConfig& cfg, std::ostream& out) {
  const AlgebraPtr alg = algebra_for(cfg);
  const RepresentationPtr rep = load_representation(cfg, alg);
  const std::string name = sanitize(rep->name);
  const std::string sigma_name = "sigma_" + tag(cfg) + "_" + name + ".json";
  const std::string r_name = "r_" + name + "_" + tag(cfg) + ".json";
  const fs::path cache = fs::path(resolve_cache_dir(cfg)) / rep_fingerprint(*rep);

  std::string sigma_text, r_text;
  bool hit = fs::exists(cache / sigma_name) && fs::exists(cache / r_name);
  if (hit) {
    sigma_text = read_file((cache / sigma_name).string());
    r_text = read_file((cache / r_name).string());
  } else {
    const SigmaSet sigma = extend_sigma(init_simple_sigma(rep));
    const RTensor R = assemble_R(sigma);
    sigma_text = dump(sigma_to_json(sigma));
    r_text = dump(rtensor_to_json(R, *alg, rep->name));
    write_atomic((cache / sigma_name).string(), sigma_text);
    write_atomic((cache / r_name).string(), r_text);
  }
  const fs::path dir(cfg.out_dir);
  write_atomic((dir / sigma_name).string(), sigma_text);
  write_atomic((dir / r_name).string(), r_text);
  if (cfg.format == "json") {
    out << dump(Json{{"cache", hit ? "hit" : "miss"},
                     {"fingerprint", cache.filename().string()},
                     {"files", {(dir / sigma_name).string(), (dir / r_name).string()}}});
  } else {
    out << (hit ? "cache hit " : "computed ") << cache.filename().string() << "\n"
        << (dir / sigma_name).string() << "\n"
        << (dir / r_name).string() << "\n";
  }
  return exit_code::ok;
}

int cmd_verify(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.suites.empty()) throw InvalidInput("verify needs at least one --suite");
  std::vector<std::string> suites;
  for (const auto& s : cfg.suites) {
    if (s == "all") {
      suites = suite_names();
      break;
    }
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), s) == names.end()) throw InvalidInput("unknown suite '" + s + "'");
    if (std::find(suites.begin(), suites.end(), s) == suites.end()) suites.push_back(s);
  }
  if (cfg.samples < 1) throw InvalidInput("--samples must be at least 1");

  VerifyContext ctx(cfg);
  Json reports = Json::array();
  int code = exit_code::ok;
  for (const auto& suite : suites) {
    const CheckReport r = ctx.run(suite);
    reports.push_back(report_to_json(r));
    if (cfg.format == "text") out << r.summary() << "\n";
    if (!r.passed) {
      if (code == exit_code::ok) err << "FAIL " << r.summary() << "\n";
      code = exit_code::failure;
    }
  }
  if (cfg.format == "json") out << dump(reports);
  return code;
}

int cmd_spectral(const JobConfig& cfg, std::ostream& out) {
  const AlgebraPtr alg = algebra_for(cfg);
  const SpectralKind kind = spectral_kind_from_string(cfg.kind);
  if (cfg.s && !cfg.z) throw InvalidInput("--s needs --z for the spectral command");
  const SpectralRMatrix r = build_spectral_R(alg, kind);
  const fs::path dir(cfg.out_dir);
  std::string path;
  Json doc;
  if (!cfg.z) {
    doc = spectral_to_json(r);
    path = (dir / ("spectral_" + cfg.kind + "_" + tag(cfg) + ".json")).string();
  } else {
    const LaurentPoly z0 = parse_z(*cfg.z);
    if (cfg.s) {
      const Rational s0 = parse_s(cfg);
      RationalMatrix X(r.matrix.space());
      r.matrix.for_each([&](int row, int col, const RatFunc& f) {
        const auto [num, den] = f.substitute(z0);
        const Rational d = den.eval(s0);
        if (is_zero(d)) throw PoleError(den.to_string() + " at s = " + format_rational(s0));
        X.set(row, col, num.eval(s0) / d);
      });
      doc = rational_matrix_doc(*alg, "spectral-" + cfg.kind, X, format_rational(s0), z0.to_string());
    } else {
      SpectralRMatrix at = r;
      at.matrix = r.matrix.map([&](const RatFunc& f) {
        const auto [num, den] = f.substitute(z0);
        return RatFunc(ZPoly(num), ZPoly(den));
      });
      doc = spectral_to_json(at);
      doc["z"] = z0.to_string();
    }
    path = (dir / ("spectral_" + cfg.kind + "_" + tag(cfg) + "_at.json")).string();
  }
  write_atomic(path, dump(doc));
  out << (cfg.format == "json" ? dump(Json{{"file", path}}) : path + "\n");
  return exit_code::ok;
}

int cmd_eval(const JobConfig& cfg, std::ostream& out) {
  const AlgebraPtr alg = algebra_for(cfg);
  const Rational s0 = parse_s(cfg);
  const fs::path dir(cfg.out_dir);
  Json doc;
  std::string path;
  if (cfg.z) {
    const SpectralKind kind = spectral_kind_from_string(cfg.kind);
    const SpectralRMatrix r = build_spectral_R(alg, kind);
    const LaurentPoly z0 = parse_z(*cfg.z);
    RationalMatrix X(r.matrix.space());
    r.matrix.for_each([&](int row, int col, const RatFunc& f) {
      const auto [num, den] = f.substitute(z0);
      const Rational d = den.eval(s0);
      if (is_zero(d)) throw PoleError(den.to_string() + " at s = " + format_rational(s0));
      X.set(row, col, num.eval(s0) / d);
    });
    doc = rational_matrix_doc(*alg, "spectral-" + cfg.kind, X, format_rational(s0), z0.to_string());
    path = (dir / ("eval_spectral_" + cfg.kind + "_" + tag(cfg) + ".json")).string();
  } else {
    const RepresentationPtr rep = load_representation(cfg, alg);
    const RTensor R = assemble_R(extend_sigma(init_simple_sigma(rep)));
    doc = rational_matrix_doc(*alg, to_string(R.kind), evaluate(R.matrix, s0), format_rational(s0), "");
    path = (dir / ("eval_" + sanitize(rep->name) + "_" + tag(cfg) + ".json")).string();
  }
  write_atomic(path, dump(doc));
  out << (cfg.format == "json" ? dump(Json{{"file", path}}) : path + "\n");
  return exit_code::ok;
}

int run_command(const std::string& command, const JobConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.format != "json" && cfg.format != "text") throw InvalidInput("--format must be json or text");
    if (command == "generate") return cmd_generate(cfg, out);
    if (command == "verify") return cmd_verify(cfg, out, err);
    if (command == "spectral") return cmd_spectral(cfg, out);
    if (command == "eval") return cmd_eval(cfg, out);
    throw InvalidInput("unknown command '" + command + "'");
  } catch (const UnsupportedRank& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::usage;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::usage;
  } catch (const SchemaError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::usage;
  } catch (const PoleError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::failure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::failure;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::usage;
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::failure;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lax operators and R-matrices for U_q[osp(m|n)]", "laxforge"};
  app.require_subcommand(1);
  JobConfig cfg;
  std::string sigma_path, cache_dir, s, z;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--m", cfg.m, "even rank m (> 2)")->required();
    sub->add_option("--n", cfg.n, "odd rank n (even)")->required();
    sub->add_option("--rep", cfg.rep, "vector, trivial, or a module file");
    sub->add_option("--out", cfg.out_dir, "output directory");
    sub->add_option("--format", cfg.format, "json or text");
    sub->add_option("--cache-dir", cache_dir, "cache directory");
    sub->add_option("--kind", cfg.kind, "untwisted or twisted");
    sub->add_option("--s", s, "evaluation point s = q^(1/2)");
    sub->add_option("--z", z, "spectral parameter (Laurent polynomial in s, or q^t)");
  };
  CLI::App* gen = app.add_subcommand("generate", "build sigma and R, write them out");
  common(gen);
  CLI::App* ver = app.add_subcommand("verify", "run property suites");
  common(ver);
  ver->add_option("--suite", cfg.suites, "suite name or all")->required();
  ver->add_option("--samples", cfg.samples, "spectral YBE samples");
  ver->add_option("--seed", cfg.seed, "spectral YBE seed");
  ver->add_option("--sigma", sigma_path, "verify a stored sigma file");
  CLI::App* spectral_cmd = app.add_subcommand("spectral", "write the spectral R-matrix");
  common(spectral_cmd);
  CLI::App* ev = app.add_subcommand("eval", "evaluate R at a rational point");
  common(ev);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help();
    return exit_code::ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::usage;
  }
  if (!sigma_path.empty()) cfg.sigma_path = sigma_path;
  if (!cache_dir.empty()) cfg.cache_dir = cache_dir;
  if (!s.empty()) cfg.s = s;
  if (!z.empty()) cfg.z = z;
  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run_command(command, cfg, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::failure;
  }
}

}  // namespace laxforge
