#include "polynorm/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "polynorm/error.hpp"
#include "polynorm/lattice.hpp"
#include "polynorm/norm.hpp"
#include "polynorm/parser.hpp"

namespace polynorm::cli {
namespace {

using nlohmann::json;

// Thrown for conditions with a dedicated exit code.
struct ExitRequest {
  int code;
  std::string message;
};

struct Options {
  std::string format = "text";
  std::string vars;
  std::string phi;
  std::string method = "def";
  bool symmetric_fastpath = false;
  std::size_t max_dim = kDefaultMaxDim;
  std::string poly;
  std::vector<std::string> factors;
};

std::string read_source(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) {
    throw ExitRequest{kUsageError, "cannot read file '" + arg.substr(1) + "'"};
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split_names(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) {
      throw ExitRequest{kUsageError, "empty variable name in --vars"};
    }
    out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

json to_json_vector(const RationalVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

json to_json_vector(const IntegerVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

json to_json_rows(const std::vector<IntegerVector>& rows) {
  json a = json::array();
  for (const auto& r : rows) a.push_back(to_json_vector(r));
  return a;
}

class Command {
 public:
  Command(std::string name, const Options& opts) : name_(std::move(name)), opts_(opts) {}

  void set_input(const std::string& source) {
    variables_ = opts_.vars.empty() ? infer_variables(source)
                                    : split_names(opts_.vars);
    poly_ = parse(source, variables_);
  }

  void set_input(LaurentPolynomial p, std::vector<std::string> vars) {
    poly_ = std::move(p);
    variables_ = std::move(vars);
  }

  const LaurentPolynomial& poly() const { return poly_; }
  const std::vector<std::string>& variables() const { return variables_; }

  RationalVector phi() const {
    if (opts_.phi.empty()) {
      throw ExitRequest{kUsageError, "--phi is required"};
    }
    RationalVector v = parse_rational_list(opts_.phi);
    if (v.size() != poly_.num_vars()) {
      throw DimensionError("--phi has " + std::to_string(v.size()) +
                           " entries for " + std::to_string(poly_.num_vars()) +
                           " variables");
    }
    return v;
  }

  void require_nonzero() const {
    if (poly_.is_zero()) throw ZeroPolynomialError();
  }

  json document(json result) const {
    json vars = json::array();
    for (const auto& v : variables_) vars.push_back(v);
    return {{"format", kFormatVersion},
            {"command", name_},
            {"input", to_string(poly_, variables_)},
            {"variables", std::move(vars)},
            {"result", std::move(result)}};
  }

 private:
  std::string name_;
  const Options& opts_;
  LaurentPolynomial poly_;
  std::vector<std::string> variables_;
};

void write_text_value(std::ostream& out, const std::string& key,
                      const json& value, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (value.is_object()) {
    out << pad << key << ":\n";
    for (const auto& [k, v] : value.items()) write_text_value(out, k, v, indent + 2);
  } else if (value.is_array() && !value.empty() &&
             (value.front().is_array() || value.front().is_object())) {
    out << pad << key << ":\n";
    for (const auto& v : value) {
      if (v.is_object()) {
        out << pad << "  -\n";
        for (const auto& [k, x] : v.items()) write_text_value(out, k, x, indent + 4);
      } else {
        std::string line;
        for (const auto& x : v) line += (line.empty() ? "" : ", ") + x.get<std::string>();
        out << pad << "  - (" << line << ")\n";
      }
    }
  } else if (value.is_array()) {
    std::string line;
    for (const auto& x : value) {
      line += (line.empty() ? "" : ", ") +
              (x.is_string() ? x.get<std::string>() : x.dump());
    }
    out << pad << key << ": [" << line << "]\n";
  } else if (value.is_string()) {
    out << pad << key << ": " << value.get<std::string>() << '\n';
  } else {
    out << pad << key << ": " << value.dump() << '\n';
  }
}

void emit(std::ostream& out, const Options& opts, const json& doc) {
  if (opts.format == "json") {
    out << doc.dump(2) << '\n';
    return;
  }
  for (const auto& [k, v] : doc.items()) write_text_value(out, k, v, 0);
}

json pair_json(const ActivePair& p) {
  return {{"alpha", to_json_vector(p.alpha)}, {"beta", to_json_vector(p.beta)}};
}

json cmd_parse(Command& c) {
  json support_json = json::array();
  for (const auto& e : support(c.poly())) support_json.push_back(to_json_vector(e));
  return {{"canonical", to_string(c.poly(), c.variables())},
          {"term_count", c.poly().term_count()},
          {"support", std::move(support_json)}};
}

json cmd_norm(Command& c, const Options& opts) {
  c.require_nonzero();
  const RationalVector phi = c.phi();
  json result = {{"method", opts.method}, {"phi", to_json_vector(phi)}};
  const ActivePair pair = active_pair(c.poly(), phi);
  if (opts.method == "def") {
    result["value"] = to_string(norm_def(c.poly(), phi));
  } else if (opts.method == "width") {
    result["value"] = to_string(norm_geometric(c.poly(), phi));
  } else {
    const SpecializedNorm s = norm_specialized(c.poly(), phi);
    result["value"] = s.indeterminate() ? std::string("indeterminate")
                                        : to_string(*s.value);
  }
  result["active_pair"] = pair_json(pair);
  return result;
}

json cmd_specialize(Command& c) {
  const RationalVector phi = c.phi();
  const UnivariatePolynomial g = specialize(c.poly(), phi);
  return {{"phi", to_json_vector(phi)},
          {"specialization", to_string(g)},
          {"degree_span",
           g.is_zero() ? std::string("indeterminate") : to_string(degree_span(g))}};
}

json cmd_reduce(Command& c) {
  c.require_nonzero();
  const LatticeReduction r = reduce(c.poly());
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= r.essential_dim; ++i) {
    names.push_back("s" + std::to_string(i));
  }
  const LaurentPolynomial reduced = reduced_polynomial(r, c.poly());
  return {{"essential_dim", r.essential_dim},
          {"inessential_dim", r.num_vars - r.essential_dim},
          {"lattice_base", to_json_vector(r.base)},
          {"lattice_basis", to_json_rows(r.basis)},
          {"degenerate_directions", to_json_rows(degenerate_directions(r))},
          {"reduced_variables", names},
          {"reduced_polynomial", to_string(reduced, names)}};
}

json cmd_ball(Command& c, const Options& opts) {
  c.require_nonzero();
  const NormBall ball = reduced_ball(c.poly(), opts.max_dim);
  if (ball.whole_dual_space()) {
    throw ExitRequest{kWholeDualSpace,
                      "norm identically zero; unit ball is the whole dual space"};
  }
  json result = to_json(ball);
  result["route"] = "difference-body";
  if (opts.symmetric_fastpath) {
    const NormBall fast = symmetric_ball(c.poly(), opts.max_dim);
    const auto& a = *ball.reduced_ball;
    const auto& b = *fast.reduced_ball;
    if (!(a == b) || a.facets() != b.facets()) {
      throw ExitRequest{kInternalError,
                        "symmetric fast path disagrees with the general route"};
    }
    if (half_space_presentation_symmetric(c.poly()) != *a.facets()) {
      throw ExitRequest{kInternalError,
                        "symmetric half-spaces disagree with the ball facets"};
    }
    result = to_json(fast);
    result["route"] = "symmetric";
    result["cross_checked"] = true;
  }
  return result;
}

json cmd_decompose(Command& c, const Options& opts) {
  static const std::regex with_mult(R"(^\s*(\(.*\))\s*\^\s*(\d+)\s*$)");
  std::vector<std::pair<std::string, unsigned long>> raw;
  std::string all_text;
  for (const auto& arg : opts.factors) {
    const std::string text = read_source(arg);
    std::smatch m;
    std::string body = text;
    unsigned long mult = 1;
    if (std::regex_match(text, m, with_mult)) {
      // Only when the leading '(' closes right before '^'.
      const std::string group = m[1].str();
      int depth = 0;
      std::size_t close = 0;
      for (std::size_t i = 0; i < group.size(); ++i) {
        if (group[i] == '(') ++depth;
        if (group[i] == ')' && --depth == 0) {
          close = i;
          break;
        }
      }
      if (close + 1 == group.size()) {
        body = group.substr(1, group.size() - 2);
        mult = std::stoul(m[2].str());
        if (mult == 0) {
          throw ExitRequest{kUsageError, "multiplicity must be positive"};
        }
      }
    }
    raw.emplace_back(body, mult);
    all_text += body + " ";
  }
  if (raw.empty()) throw ExitRequest{kUsageError, "no factors given"};

  const std::vector<std::string> vars =
      opts.vars.empty() ? infer_variables(all_text) : split_names(opts.vars);
  Factorization fact;
  for (const auto& [body, mult] : raw) {
    LaurentPolynomial p = parse(body, vars);
    if (p.is_zero()) throw ZeroPolynomialError();
    fact.factors.push_back({std::move(p), mult});
  }
  c.set_input(fact.product(), vars);
  const RationalVector phi = c.phi();

  json factors = json::array();
  for (const auto& f : fact.factors) {
    factors.push_back({{"factor", to_string(f.polynomial, vars)},
                       {"multiplicity", f.multiplicity},
                       {"norm", to_string(norm_def(f.polynomial, phi))}});
  }
  const Rational total = norm_decomposed(fact, phi);
  const Rational direct = norm_def(c.poly(), phi);
  if (total != direct) {
    throw ExitRequest{kInternalError, "decomposition total " + to_string(total) +
                                          " differs from direct norm " +
                                          to_string(direct)};
  }
  return {{"phi", to_json_vector(phi)},
          {"factors", std::move(factors)},
          {"total", to_string(total)},
          {"direct", to_string(direct)}};
}

// CLI11 would read "-1,0" as a short flag; glue values onto their option.
std::vector<std::string> glue_values(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if ((a == "--phi" || a == "--vars") && i + 1 < args.size()) {
      out.push_back(a + "=" + args[++i]);
    } else {
      out.push_back(a);
    }
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options opts;
  CLI::App app{"Laurent norms of multivariate Laurent polynomials", "polynorm"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--vars", opts.vars, "Variable order, e.g. t1,t2,t3");
    sub->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
  };

  auto* parse_cmd = app.add_subcommand("parse", "Canonicalize a polynomial");
  parse_cmd->add_option("poly", opts.poly, "Polynomial text or @file")->required();
  add_common(parse_cmd);

  auto* norm_cmd = app.add_subcommand("norm", "Evaluate the Laurent norm");
  norm_cmd->add_option("poly", opts.poly, "Polynomial text or @file")->required();
  norm_cmd->add_option("--phi", opts.phi, "Dual vector, e.g. 1,-1/2,0")->required();
  norm_cmd->add_option("--method", opts.method, "def | width | specialize")
      ->check(CLI::IsMember({"def", "width", "specialize"}));
  add_common(norm_cmd);

  auto* spec_cmd =
      app.add_subcommand("specialize", "Substitute t_i = t^phi_i");
  spec_cmd->add_option("poly", opts.poly, "Polynomial text or @file")->required();
  spec_cmd->add_option("--phi", opts.phi, "Integer dual vector")->required();
  add_common(spec_cmd);

  auto* ball_cmd = app.add_subcommand("ball", "Reduced norm unit ball");
  ball_cmd->add_option("poly", opts.poly, "Polynomial text or @file")->required();
  ball_cmd->add_flag("--symmetric-fastpath", opts.symmetric_fastpath,
                     "Use and cross-check the centrally symmetric route");
  ball_cmd->add_option("--max-dim", opts.max_dim, "Facet enumeration cap");
  add_common(ball_cmd);

  auto* reduce_cmd = app.add_subcommand("reduce", "Essential variables");
  reduce_cmd->add_option("poly", opts.poly, "Polynomial text or @file")->required();
  add_common(reduce_cmd);

  auto* decompose_cmd =
      app.add_subcommand("decompose", "Norm through a factorization");
  decompose_cmd->add_option("factors", opts.factors, "Factors as (poly)^mult")
      ->required();
  decompose_cmd->add_option("--phi", opts.phi, "Dual vector")->required();
  add_common(decompose_cmd);

  const std::vector<std::string> glued = glue_values(args);
  std::vector<std::string> reversed(glued.rbegin(), glued.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  CLI::App* chosen = app.get_subcommands().front();
  Command command(chosen->get_name(), opts);
  try {
    json result;
    if (chosen == decompose_cmd) {
      result = cmd_decompose(command, opts);
    } else {
      command.set_input(read_source(opts.poly));
      if (chosen == parse_cmd) result = cmd_parse(command);
      else if (chosen == norm_cmd) result = cmd_norm(command, opts);
      else if (chosen == spec_cmd) result = cmd_specialize(command);
      else if (chosen == ball_cmd) result = cmd_ball(command, opts);
      else result = cmd_reduce(command);
    }
    emit(out, opts, command.document(std::move(result)));
    return kOk;
  } catch (const ExitRequest& e) {
    err << "error: " << e.message << '\n';
    return e.code;
  } catch (const ZeroPolynomialError& e) {
    err << "error: " << e.what() << '\n';
    return kZeroPolynomial;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace polynorm::cli
