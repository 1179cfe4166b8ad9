// Copyright 2026 The supertropical Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "suptrop/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "supertropical/supertropical.hpp"

namespace suptrop {

namespace st = supertropical;
using json = nlohmann::ordered_json;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;
  std::uint64_t seed = 0;
  std::string order;
  std::string target;
  std::string coeffs;
  std::string form;
  std::string vector;
  std::size_t budget = 4096;
  bool supertropical = false;
  bool witness = false;
  std::vector<std::string> files;
};

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

st::Mat read_matrix(const std::string& path) { return st::parse_matrix(slurp(path)); }
st::Vec read_vector(const std::string& path) { return st::parse_vector(slurp(path)); }
std::vector<st::Vec> read_rows(const std::string& path) { return read_matrix(path).row_list(); }

const std::string& need_file(const Options& o, std::size_t i, const char* what) {
  if (i >= o.files.size()) throw UsageError(std::string("missing ") + what + " file");
  return o.files[i];
}

const std::string& need_flag(const std::string& value, const char* flag) {
  if (value.empty()) throw UsageError(std::string("missing ") + flag);
  return value;
}

// Output sink: canonical text lines, or one JSON document.
class Report {
 public:
  Report(std::string kind, bool as_json) : kind_(std::move(kind)), json_(as_json) {}

  static json scalar(const st::Scalar& s) {
    return json{{"v", s.is_zero() ? std::string("-inf") : s.value().to_string()}, {"ghost", s.is_ghost0()}};
  }
  static json vec(const st::Vec& v) {
    json a = json::array();
    for (const auto& s : v) a.push_back(scalar(s));
    return a;
  }
  static json mat(const st::Mat& m) {
    json a = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(vec(m.row(i)));
    return a;
  }
  static json indices(const std::vector<std::size_t>& ix) {
    json a = json::array();
    for (auto i : ix) a.push_back(i + 1);
    return a;
  }
  static std::string index_text(const std::vector<std::size_t>& ix) {
    std::string s;
    for (auto i : ix) s += (s.empty() ? "" : " ") + std::to_string(i + 1);
    return s;
  }

  void value(json v, const std::string& text) {
    value_ = std::move(v);
    text_ += text;
  }
  void line(const std::string& text) { text_ += text + "\n"; }
  void witness(const std::string& key, json v, const std::string& text) {
    if (witness_.is_null()) witness_ = json::object();
    witness_[key] = std::move(v);
    text_ += text;
  }

  void emit(std::ostream& out) const {
    if (json_) {
      json doc{{"kind", kind_}, {"value", value_}, {"witness", witness_}};
      out << doc.dump() << "\n";
    } else {
      out << text_;
    }
  }

 private:
  std::string kind_;
  bool json_;
  json value_;
  json witness_;
  std::string text_;
};

void dep_witness(Report& r, const st::DepWitness& w) {
  const auto sup = w.support();
  r.witness("support", Report::indices(sup), "support: " + Report::index_text(sup) + "\n");
  r.witness("coeffs", Report::vec(w.coeffs), "coeffs: " + st::print_vector(w.coeffs) + "\n");
}

std::vector<std::size_t> parse_order(const std::string& text, std::size_t k) {
  std::vector<std::size_t> order;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    unsigned long i = 0;
    try {
      i = std::stoul(item, &pos);
    } catch (const std::exception&) {
      throw UsageError("bad --order entry '" + item + "'");
    }
    if (pos != item.size() || i == 0 || i > k) throw UsageError("bad --order entry '" + item + "'");
    order.push_back(i - 1);
  }
  return order;
}

std::string verdict(bool b, const char* yes, const char* no) { return std::string(b ? yes : no) + "\n"; }

void cmd_det(const Options& o, Report& r) {
  auto p = st::permanent(read_matrix(need_file(o, 0, "matrix")));
  r.value(Report::scalar(p), st::print_scalar(p) + "\n");
}

void cmd_adj(const Options& o, Report& r) {
  auto a = st::adjoint(read_matrix(need_file(o, 0, "matrix")));
  r.value(Report::mat(a), st::print_matrix(a));
}

void cmd_nabla(const Options& o, Report& r) {
  auto a = st::nabla(read_matrix(need_file(o, 0, "matrix")));
  r.value(Report::mat(a), st::print_matrix(a));
}

void cmd_qid(const Options& o, Report& r) {
  auto [left, right] = st::quasi_identity(read_matrix(need_file(o, 0, "matrix")));
  r.value(json{{"left", Report::mat(left)}, {"right", Report::mat(right)}},
          "# I\n" + st::print_matrix(left) + "# I'\n" + st::print_matrix(right));
}

void cmd_rank(const Options& o, Report& r) {
  auto k = st::rank(read_matrix(need_file(o, 0, "matrix")));
  r.value(k, std::to_string(k) + "\n");
}

void cmd_dep(const Options& o, Report& r) {
  auto s = read_rows(need_file(o, 0, "vector set"));
  auto w = o.target.empty() ? st::is_dependent(s) : st::dependence_on(s, read_vector(o.target));
  r.value(w.has_value(), verdict(w.has_value(), "dependent", "independent"));
  if (w) dep_witness(r, *w);
}

void cmd_saturate(const Options& o, Report& r) {
  auto s = read_rows(need_file(o, 0, "vector set"));
  auto v = read_vector(need_flag(o.target, "--target"));
  std::optional<st::DepWitness> start;
  if (o.coeffs.empty()) {
    start = st::dependence_on(s, v);
    if (!start) throw st::InvalidInput("target has no dependence on the set");
  } else {
    start = st::DepWitness{read_vector(o.coeffs), v};
  }
  dep_witness(r, st::saturate(v, s, *start));
  r.value(true, "");
}

void cmd_span(const Options& o, Report& r) {
  auto s = read_rows(need_file(o, 0, "vector set"));
  auto w = st::spans(s, read_vector(need_flag(o.vector, "--vector")));
  r.value(w.has_value(), verdict(w.has_value(), "spanned", "not spanned"));
  if (w) {
    r.witness("coeffs", Report::vec(w->coeffs), "coeffs: " + st::print_vector(w->coeffs) + "\n");
    r.witness("ghost", Report::vec(w->ghost_part), "ghost: " + st::print_vector(w->ghost_part) + "\n");
  }
}

void base_report(Report& r, const st::BaseReport& b) {
  json normalized = json::array();
  std::string rows;
  for (const auto& v : b.normalized) {
    normalized.push_back(Report::vec(v));
    rows += st::print_vector(v) + "\n";
  }
  r.value(json{{"rank", b.rank}, {"indices", Report::indices(b.indices)}, {"vectors", normalized}},
          "rank: " + std::to_string(b.rank) + "\nindices: " + Report::index_text(b.indices) + "\n" + rows);
}

void cmd_sbase(const Options& o, Report& r) { base_report(r, st::s_base(read_rows(need_file(o, 0, "vector set")))); }

void cmd_dbase(const Options& o, Report& r) {
  auto s = read_rows(need_file(o, 0, "vector set"));
  base_report(r, o.order.empty() ? st::d_base(s) : st::d_base(s, parse_order(o.order, s.size())));
}

void cmd_critical(const Options& o, Report& r) {
  auto ix = st::critical_indices(read_rows(need_file(o, 0, "vector set")));
  r.value(Report::indices(ix), "indices: " + Report::index_text(ix) + "\n");
}

void cmd_thick(const Options& o, Report& r) {
  bool t = st::is_thick(read_rows(need_file(o, 0, "subspace")), read_rows(need_file(o, 1, "ambient")));
  r.value(t, verdict(t, "thick", "not thick"));
}

void cmd_changebase(const Options& o, Report& r) {
  auto p = st::change_of_base(read_matrix(need_file(o, 0, "base")), read_matrix(need_file(o, 1, "base")));
  r.value(Report::mat(p), st::print_matrix(p));
}

void cmd_dual(const Options& o, Report& r) {
  auto b = read_rows(need_file(o, 0, "base"));
  if (!o.vector.empty()) {
    auto v = st::reconstruct(b, read_vector(o.vector));
    r.value(Report::vec(v), st::print_vector(v) + "\n");
    return;
  }
  auto d = st::dual_matrix(b);
  r.value(Report::mat(d), st::print_matrix(d));
}

st::GramForm read_form(const Options& o, std::size_t n) {
  if (o.form.empty()) return st::GramForm{st::Mat::identity(n)};
  return st::GramForm{read_matrix(o.form)};
}

void cmd_gram(const Options& o, Report& r) {
  auto w = read_rows(need_file(o, 0, "vector set"));
  if (w.empty()) throw UsageError("empty vector set");
  auto f = read_form(o, w.front().size());
  auto g = st::gram_matrix(w, f);
  auto p = st::permanent(g);
  r.value(json{{"gram", Report::mat(g)}, {"permanent", Report::scalar(p)}},
          st::print_matrix(g) + "permanent: " + st::print_scalar(p) + "\n");
  if (!o.witness) return;
  auto d = st::gram_dependence(w, f);
  r.line(d ? "dependent" : "independent");
  if (d) dep_witness(r, *d);
}

void cmd_orthosym(const Options& o, Report& r) {
  st::GramForm f{read_matrix(need_file(o, 0, "form"))};
  auto v = o.supertropical ? st::is_supertropically_symmetric(f, o.budget, o.seed)
                           : st::is_orthogonal_symmetric(f, o.budget, o.seed);
  r.value(json{{"violated", v.violated}, {"regime", st::to_string(v.regime)}, {"pairs", v.pairs_checked}},
          verdict(v.violated, "violated", "symmetric") + "regime: " + st::to_string(v.regime) +
              "\npairs: " + std::to_string(v.pairs_checked) + "\n");
  if (!v.violated) return;
  auto xy = st::evaluate(f, v.x, v.y), yx = st::evaluate(f, v.y, v.x);
  r.witness("x", Report::vec(v.x), "x: " + st::print_vector(v.x) + "\n");
  r.witness("y", Report::vec(v.y), "y: " + st::print_vector(v.y) + "\n");
  r.witness("xy", Report::scalar(xy), "xy: " + st::print_scalar(xy) + "\n");
  r.witness("yx", Report::scalar(yx), "yx: " + st::print_scalar(yx) + "\n");
}

void cmd_isotropy(const Options& o, Report& r) {
  st::GramForm f{read_matrix(need_file(o, 0, "form"))};
  auto i = st::isotropy(f, read_vector(need_flag(o.vector, "--vector")));
  r.value(st::to_string(i), st::to_string(i) + "\n");
}

void cmd_oracle(const Options& o, Report& r) {
  const auto& what = need_file(o, 0, "oracle name");
  if (what == "perm") {
    auto p = st::oracle::brute_permanent(read_matrix(need_file(o, 1, "matrix")));
    r.value(Report::scalar(p), st::print_scalar(p) + "\n");
  } else if (what == "dep") {
    auto s = read_rows(need_file(o, 1, "vector set"));
    std::optional<st::Vec> t;
    if (!o.target.empty()) t = read_vector(o.target);
    auto w = st::oracle::brute_dependence(s, t);
    r.value(w.has_value(), verdict(w.has_value(), "dependent", "independent"));
    if (w) dep_witness(r, *w);
  } else if (what == "saturated") {
    auto s = read_rows(need_file(o, 1, "vector set"));
    auto v = read_vector(need_flag(o.target, "--target"));
    st::DepWitness w{read_vector(need_flag(o.coeffs, "--coeffs")), v};
    bool ok = st::oracle::check_saturated(w, s, v);
    r.value(ok, verdict(ok, "saturated", "not saturated"));
  } else {
    throw UsageError("unknown oracle '" + what + "' (perm, dep, saturated)");
  }
}

struct Command {
  const char* name;
  const char* help;
  void (*fn)(const Options&, Report&);
};

const Command kCommands[] = {
    {"det", "permanent of a square matrix", cmd_det},
    {"adj", "adjoint matrix", cmd_adj},
    {"nabla", "adjoint scaled by the inverse permanent", cmd_nabla},
    {"qid", "left and right quasi-identities", cmd_qid},
    {"rank", "largest nonsingular minor", cmd_rank},
    {"dep", "tropical dependence of the rows (or of --target on them)", cmd_dep},
    {"saturate", "saturated dependence of --target on the rows", cmd_saturate},
    {"span", "whether the rows span --vector", cmd_span},
    {"sbase", "s-base of the rows", cmd_sbase},
    {"critical", "critical rows", cmd_critical},
    {"dbase", "d-base of the rows, optionally in --order", cmd_dbase},
    {"thick", "whether SUB is thick in AMBIENT", cmd_thick},
    {"changebase", "matrix P with B = P A", cmd_changebase},
    {"dual", "dual base covectors, or reconstruct --vector", cmd_dual},
    {"gram", "Gram matrix of the rows under --form (default dot)", cmd_gram},
    {"orthosym", "orthogonal (or --supertropical) symmetry scan", cmd_orthosym},
    {"isotropy", "isotropy class of --vector", cmd_isotropy},
    {"oracle", "brute-force checks: perm, dep, saturated", cmd_oracle},
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"supertropical linear algebra", "suptrop"};
  app.require_subcommand(1, 1);
  Options o;
  std::vector<std::pair<CLI::App*, const Command*>> subs;
  for (const auto& c : kCommands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    sub->add_flag("--json", o.json, "print one JSON document");
    sub->add_option("--seed", o.seed, "seed for sampled checks");
    sub->add_option("--order", o.order, "1-based visit order, e.g. 2,3,1");
    sub->add_option("--target", o.target, "target vector file");
    sub->add_option("--coeffs", o.coeffs, "starting coefficient vector file");
    sub->add_option("--form", o.form, "form matrix file");
    sub->add_option("--vector", o.vector, "vector file");
    sub->add_option("--budget", o.budget, "sampled pair budget");
    sub->add_flag("--supertropical", o.supertropical, "check supertropical symmetry");
    sub->add_flag("--witness", o.witness, "also report a Gram dependence witness");
    sub->add_option("files", o.files, "input files ('-' for stdin)");
    subs.emplace_back(sub, &c);
  }

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  for (const auto& [sub, cmd] : subs) {
    if (!sub->parsed()) continue;
    Report r(cmd->name, o.json);
    try {
      cmd->fn(o, r);
    } catch (const st::ParseError& e) {
      err << "error: " << e.what() << "\n";
      return kUsageError;
    } catch (const UsageError& e) {
      err << "error: " << e.what() << "\n";
      return kUsageError;
    } catch (const st::Error& e) {
      err << "error: " << e.what() << "\n";
      return kDomainError;
    }
    r.emit(out);
    return kOk;
  }
  return kUsageError;
}

}  // namespace suptrop
