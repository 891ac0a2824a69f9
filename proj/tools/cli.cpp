#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "tilecount/cfinite.hpp"
#include "tilecount/directenum.hpp"
#include "tilecount/format.hpp"
#include "tilecount/region.hpp"
#include "tilecount/skinny.hpp"
#include "tilecount/stats.hpp"
#include "tilecount/transfer.hpp"

namespace tilecount::cli {

namespace {

// Raised for bad input that CLI11 cannot see (wrong arity, unreadable file).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OracleMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr int kOracleTerms = 4;

struct Options {
  std::vector<std::string> params;
  int terms = -1;
  std::string mode = "dimer";
  bool weighted = false;
  int max_order = 16;
  int margin = 5;
  std::string format = "plain";
  std::string file;
  bool verify_oracle = false;
  std::size_t bound = 0;
  std::string var = "h";
  std::size_t index = 40;
  int digits = 6;
  int up_to = 4;

  TilingMode tiling() const { return mode == "md" ? TilingMode::MonomerDimer : TilingMode::Dimer; }
  bool json() const { return format == "json"; }
  int terms_or(int fallback) const { return terms < 0 ? fallback : terms; }
  GuessConfig guess() const { return {max_order, margin}; }
};

enum Flag : unsigned {
  kTerms = 1U << 0,
  kMode = 1U << 1,
  kWeighted = 1U << 2,
  kGuess = 1U << 3,
  kFile = 1U << 4,
  kVerify = 1U << 5,
  kBound = 1U << 6,
  kVar = 1U << 7,
  kGrowth = 1U << 8,
};

void add_flags(CLI::App* sub, Options& o, unsigned flags) {
  // Positionals are collected from the leftovers so that CLI11 leaves JSON
  // arrays such as [[0,1],[1,1]] intact.
  sub->allow_extras();
  sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"plain", "json"}));
  if (flags & kTerms) sub->add_option("--terms", o.terms, "number of terms")->check(CLI::PositiveNumber);
  if (flags & kMode) sub->add_option("--mode", o.mode, "dimer or md")->check(CLI::IsMember({"dimer", "md"}));
  if (flags & kWeighted) sub->add_flag("--weighted", o.weighted, "h/v/m weight enumerators");
  if (flags & kGuess) {
    sub->add_option("--max-order", o.max_order, "largest recurrence order tried")->check(CLI::PositiveNumber);
    sub->add_option("--margin", o.margin, "extra terms a guess must explain")->check(CLI::PositiveNumber);
  }
  if (flags & kFile) sub->add_option("--file", o.file, "input file");
  if (flags & kVerify) sub->add_flag("--verify-oracle", o.verify_oracle, "cross-check against direct enumeration");
  if (flags & kBound) sub->add_option("--bound", o.bound, "order bound")->required();
  if (flags & kVar) {
    sub->add_option("--var", o.var, "tile variable h, v or m")->check(CLI::IsMember({"h", "v", "m"}));
    sub->add_option("--up-to", o.up_to, "highest moment")->check(CLI::Range(2, 4));
  }
  if (flags & kGrowth) {
    sub->add_option("--index", o.index, "term index used for the ratio")->check(CLI::Range(2, 100000));
    sub->add_option("--digits", o.digits, "decimal places")->check(CLI::Range(0, 100));
  }
}

std::vector<int> int_params(const Options& o, std::size_t count, int minimum) {
  if (o.params.size() != count) {
    throw UsageError("expected " + std::to_string(count) + " integer parameters, got " + std::to_string(o.params.size()));
  }
  std::vector<int> v;
  for (const auto& p : o.params) {
    try {
      std::size_t used = 0;
      const int x = std::stoi(p, &used);
      if (used != p.size() || x < minimum) throw std::invalid_argument(p);
      v.push_back(x);
    } catch (const std::logic_error&) {
      throw UsageError("bad parameter '" + p + "' (expected an integer >= " + std::to_string(minimum) + ")");
    }
  }
  return v;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Terms from the positional list, or from --file as JSON (a sequence
// object or an array) or whitespace-separated values.
std::vector<Rational> read_terms(const Options& o, std::size_t skip) {
  std::vector<std::string> words(o.params.begin() + static_cast<long>(std::min(skip, o.params.size())), o.params.end());
  if (!o.file.empty()) {
    if (!words.empty()) throw UsageError("give terms either positionally or with --file, not both");
    const std::string text = read_file(o.file);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) {
      Json j = Json::parse(text);
      const Json& arr = j.is_object() ? j.at("terms") : j;
      std::vector<Rational> out;
      for (const auto& x : arr) out.push_back(rational_from_json(x));
      return out;
    }
    std::istringstream in(text);
    for (std::string w; in >> w;) words.push_back(w);
  }
  std::vector<Rational> out;
  for (const auto& w : words) out.push_back(parse_rational(w));
  return out;
}

void print_sequence(std::ostream& out, const Options& o, const Json& params, const std::vector<Integer>& seq) {
  const auto terms = to_rationals(seq);
  if (o.json()) {
    out << sequence_to_json(params, terms).dump(2) << "\n";
    return;
  }
  for (const auto& x : seq) out << x << "\n";
}

void print_weighted(std::ostream& out, const Options& o, const Json& params, const std::vector<MultiPoly>& seq) {
  const auto names = weight_names(o.tiling());
  if (o.json()) {
    Json terms = Json::array();
    for (const auto& p : seq) terms.push_back(poly_to_json(p, names));
    out << Json{{"params", params}, {"terms", terms}}.dump(2) << "\n";
    return;
  }
  for (const auto& p : seq) out << format_poly(p, names) << "\n";
}

template <class T>
void check_oracle(const std::vector<T>& got, const std::function<T(int)>& oracle, const std::string& what) {
  const int n_max = std::min<int>(kOracleTerms, static_cast<int>(got.size()));
  for (int n = 0; n < n_max; ++n) {
    if (!(oracle(n) == got[static_cast<std::size_t>(n)])) {
      throw OracleMismatch("oracle mismatch for " + what + " at n=" + std::to_string(n));
    }
  }
}

void emit_rf(std::ostream& out, const Options& o, const Json& params, const std::optional<RationalFunction>& rf,
             std::size_t used) {
  if (!rf) {
    throw std::runtime_error("no recurrence of order <= " + std::to_string(o.max_order) + " fits " +
                             std::to_string(used) + " terms");
  }
  if (o.json()) {
    Json j = rf_to_json(*rf);
    j["params"] = params;
    out << j.dump(2) << "\n";
  } else {
    out << format_rf(*rf) << "\n";
  }
}

int default_gf_terms(const Options& o) { return 2 * o.max_order + o.margin + 1; }

// Subcommand bodies.

void cmd_count(const Options& o, std::ostream& out, bool weighted) {
  if (o.file.empty()) throw UsageError("count needs --file");
  if (!o.params.empty()) throw UsageError("count takes no positional parameters");
  const Region region = parse_region_file(read_file(o.file));
  const Json params{{"file", o.file}, {"mode", o.mode}};
  if (weighted) {
    const auto names = weight_names(o.tiling());
    const MultiPoly w = count_weighted(region, o.tiling());
    if (o.json()) {
      out << Json{{"params", params}, {"enumerator", poly_to_json(w, names)}}.dump(2) << "\n";
    } else {
      out << format_poly(w, names) << "\n";
    }
    return;
  }
  const Integer c = count_tilings(region, o.tiling());
  if (o.json()) {
    out << Json{{"params", params}, {"count", to_string(c)}}.dump(2) << "\n";
  } else {
    out << c << "\n";
  }
}

void cmd_rect_seq(const Options& o, std::ostream& out) {
  const int m = int_params(o, 1, 1)[0];
  const int N = o.terms_or(10) - 1;
  const Json params{{"m", m}, {"mode", o.mode}};
  if (o.weighted) {
    auto seq = seq_rect_weighted(m, N, o.tiling());
    if (o.verify_oracle) {
      check_oracle<MultiPoly>(seq, [&](int n) { return count_weighted(build_rectangle(m, n), o.tiling()); }, "rect-seq");
    }
    print_weighted(out, o, params, seq);
    return;
  }
  auto seq = seq_rect(m, N, o.tiling());
  if (o.verify_oracle) {
    check_oracle<Integer>(seq, [&](int n) { return count_tilings(build_rectangle(m, n), o.tiling()); }, "rect-seq");
  }
  print_sequence(out, o, params, seq);
}

Json frame_params(const std::vector<int>& p, const Options& o) {
  return Json{{"a1", p[0]}, {"a2", p[1]}, {"b1", p[2]}, {"b2", p[3]}, {"mode", o.mode}};
}

FrameSpec square_frame(const std::vector<int>& p, int n) { return FrameSpec{p[0], p[1], p[2], p[3], n, n}; }

void cmd_frame_seq(const Options& o, std::ostream& out) {
  const auto p = int_params(o, 4, 1);
  const int N = o.terms_or(16) - 1;
  if (o.weighted) {
    auto seq = frame_seq_weighted(p[0], p[1], p[2], p[3], N, o.tiling());
    if (o.verify_oracle) {
      check_oracle<MultiPoly>(seq, [&](int n) { return count_weighted(build_frame(square_frame(p, n)), o.tiling()); },
                              "frame-seq");
    }
    print_weighted(out, o, frame_params(p, o), seq);
    return;
  }
  auto seq = frame_seq(p[0], p[1], p[2], p[3], N, o.tiling());
  if (o.verify_oracle) {
    check_oracle<Integer>(seq, [&](int n) { return count_tilings(build_frame(square_frame(p, n)), o.tiling()); },
                          "frame-seq");
  }
  print_sequence(out, o, frame_params(p, o), seq);
}

void cmd_frame_gf(const Options& o, std::ostream& out) {
  const auto p = int_params(o, 4, 1);
  const int count = o.terms_or(default_gf_terms(o));
  auto seq = frame_seq(p[0], p[1], p[2], p[3], count - 1, o.tiling());
  if (o.verify_oracle) {
    check_oracle<Integer>(seq, [&](int n) { return count_tilings(build_frame(square_frame(p, n)), o.tiling()); },
                          "frame-gf");
  }
  emit_rf(out, o, frame_params(p, o), guess_rational_gf(to_rationals(seq), o.guess()), seq.size());
}

void cmd_frame_gf_bivariate(const Options& o, std::ostream& out) {
  const auto p = int_params(o, 4, 1);
  const int size = o.terms_or(15);
  const IntTable table = frame_table(p[0], p[1], p[2], p[3], size - 1, size - 1, o.tiling());
  if (o.verify_oracle) {
    for (int m = 0; m < std::min(size, 3); ++m) {
      for (int n = 0; n < std::min(size, 3); ++n) {
        if (count_tilings(build_frame({p[0], p[1], p[2], p[3], m, n}), o.tiling()) !=
            table[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)]) {
          throw OracleMismatch("oracle mismatch for frame-gf-bivariate at (" + std::to_string(m) + ", " +
                               std::to_string(n) + ")");
        }
      }
    }
  }
  std::vector<std::vector<Rational>> rows;
  for (const auto& r : table) rows.push_back(to_rationals(r));
  auto gf = guess_bivariate_gf(rows, o.guess());
  if (!gf) throw std::runtime_error("no bivariate rational generating function fits the " + std::to_string(size) + "x" +
                                    std::to_string(size) + " table");
  if (o.json()) {
    Json j = bivariate_to_json(*gf);
    j["params"] = frame_params(p, o);
    out << j.dump(2) << "\n";
  } else {
    out << format_bivariate(*gf) << "\n";
  }
}

Json cross_params(const std::vector<int>& p, const Options& o) { return Json{{"a", p[0]}, {"b", p[1]}, {"mode", o.mode}}; }

void cmd_cross_seq(const Options& o, std::ostream& out) {
  const auto p = int_params(o, 2, 1);
  const int N = o.terms_or(16) - 1;
  if (o.weighted) {
    auto seq = cross_seq_weighted(p[0], p[1], N, o.tiling());
    if (o.verify_oracle) {
      check_oracle<MultiPoly>(seq, [&](int n) { return count_weighted(build_cross({p[0], p[1], n}), o.tiling()); },
                              "cross-seq");
    }
    print_weighted(out, o, cross_params(p, o), seq);
    return;
  }
  auto seq = cross_seq(p[0], p[1], N, o.tiling());
  if (o.verify_oracle) {
    check_oracle<Integer>(seq, [&](int n) { return count_tilings(build_cross({p[0], p[1], n}), o.tiling()); },
                          "cross-seq");
  }
  print_sequence(out, o, cross_params(p, o), seq);
}

void cmd_cross_gf(const Options& o, std::ostream& out) {
  const auto p = int_params(o, 2, 1);
  const int count = o.terms_or(default_gf_terms(o));
  auto seq = cross_seq(p[0], p[1], count - 1, o.tiling());
  if (o.verify_oracle) {
    check_oracle<Integer>(seq, [&](int n) { return count_tilings(build_cross({p[0], p[1], n}), o.tiling()); },
                          "cross-gf");
  }
  emit_rf(out, o, cross_params(p, o), guess_rational_gf(to_rationals(seq), o.guess()), seq.size());
}

void print_cfinite(std::ostream& out, const Options& o, const CFinite& cf) {
  if (o.json()) {
    out << cfinite_to_json(cf).dump(2) << "\n";
  } else {
    out << format_cfinite(cf) << "\n";
  }
}

void cmd_guess(const Options& o, std::ostream& out) {
  const auto terms = read_terms(o, 0);
  if (terms.empty()) throw UsageError("guess-cfinite needs terms (positional or --file)");
  auto cf = guess_cfinite(terms, o.guess());
  if (!cf) {
    throw std::runtime_error("no recurrence of order <= " + std::to_string(o.max_order) + " fits " +
                             std::to_string(terms.size()) + " terms");
  }
  print_cfinite(out, o, *cf);
}

CFinite cfinite_arg(const std::string& text) {
  try {
    return parse_cfinite(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void cmd_cfinite_equal(const Options& o, std::ostream& out) {
  if (o.params.size() != 2) throw UsageError("cfinite-equal needs two C-finite arguments");
  const bool eq = cfinite_equal(cfinite_arg(o.params[0]), cfinite_arg(o.params[1]));
  if (o.json()) {
    out << Json{{"equal", eq}}.dump(2) << "\n";
  } else {
    out << (eq ? "true" : "false") << "\n";
  }
}

void cmd_verify_bound(const Options& o, std::ostream& out) {
  if (o.params.empty()) throw UsageError("verify-bound needs a C-finite argument");
  const CFinite cf = cfinite_arg(o.params[0]);
  const auto terms = read_terms(o, 1);
  const VerifyStatus status = verify_cfinite_with_bound(cf, terms, o.bound);
  const char* word = status == VerifyStatus::ProvedUnderBound ? "proved"
                     : status == VerifyStatus::Refuted        ? "refuted"
                                                              : "inconclusive";
  if (o.json()) {
    out << Json{{"status", word}, {"terms", terms.size()}, {"bound", o.bound}, {"order", cf.order()}}.dump(2) << "\n";
  } else {
    out << word << "\n";
  }
}

void cmd_moments(const Options& o, std::ostream& out) {
  std::vector<MultiPoly> polys;
  if (!o.file.empty()) {
    if (!o.params.empty()) throw UsageError("moments takes either frame parameters or --file");
    polys.push_back(count_weighted(parse_region_file(read_file(o.file)), o.tiling()));
  } else {
    const auto p = int_params(o, 4, 1);
    polys = frame_seq_weighted(p[0], p[1], p[2], p[3], o.terms_or(8) - 1, o.tiling());
  }
  if (o.var == "m" && o.tiling() == TilingMode::Dimer) throw UsageError("--var m needs --mode md");
  const MomentReport report = weighted_moments(polys, o.var, o.up_to);
  if (o.json()) {
    out << moments_to_json(report).dump(2) << "\n";
    return;
  }
  auto opt = [](const std::optional<Rational>& x) { return x ? format_rational(*x) : std::string("-"); };
  for (const auto& r : report.records) {
    out << "n=" << r.n << " count=" << format_rational(r.count) << " mean=" << format_rational(r.mean)
        << " variance=" << format_rational(r.variance);
    if (report.up_to >= 3) out << " mu3=" << opt(r.mu3) << " skewness^2=" << opt(r.skewness_squared);
    if (report.up_to >= 4) out << " mu4=" << opt(r.mu4) << " kurtosis=" << opt(r.kurtosis);
    out << "\n";
  }
}

void cmd_growth(const Options& o, std::ostream& out) {
  if (o.params.size() != 1) throw UsageError("growth needs one C-finite argument");
  const CFinite cf = cfinite_arg(o.params[0]);
  const GrowthEstimate g = growth_rate(cf, {}, GrowthOptions{o.index, o.digits});
  if (o.json()) {
    out << growth_to_json(g).dump(2) << "\n";
  } else {
    out << g.decimal << " +/- " << g.error_decimal << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact tiling counts, recurrences and generating functions"};
  app.require_subcommand(1);
  Options o;

  struct Entry {
    const char* name;
    const char* help;
    unsigned flags;
    std::function<void(const Options&, std::ostream&)> body;
  };
  const std::vector<Entry> entries{
      {"count", "--file PATH: count tilings of a region file", kMode | kWeighted | kFile,
       [](const Options& op, std::ostream& os) { cmd_count(op, os, op.weighted); }},
      {"count-weighted", "--file PATH: h/v/m weight enumerator of a region file", kMode | kFile,
       [](const Options& op, std::ostream& os) { cmd_count(op, os, true); }},
      {"rect-seq", "M: tilings of M x n rectangles for n = 0, 1, ...", kTerms | kMode | kWeighted | kVerify, cmd_rect_seq},
      {"frame-seq", "A1 A2 B1 B2: tilings of frames with an n x n hole", kTerms | kMode | kWeighted | kVerify, cmd_frame_seq},
      {"frame-gf", "A1 A2 B1 B2: rational generating function of frame-seq", kTerms | kMode | kGuess | kVerify, cmd_frame_gf},
      {"frame-gf-bivariate", "A1 A2 B1 B2: bivariate generating function over m x n holes", kTerms | kMode | kGuess | kVerify,
       cmd_frame_gf_bivariate},
      {"cross-seq", "A B: tilings of crosses with an A x B center", kTerms | kMode | kWeighted | kVerify, cmd_cross_seq},
      {"cross-gf", "A B: rational generating function of cross-seq", kTerms | kMode | kGuess | kVerify, cmd_cross_gf},
      {"guess-cfinite", "TERMS... | --file PATH: minimal recurrence fitting the terms", kGuess | kFile, cmd_guess},
      {"cfinite-equal", "CF1 CF2: compare two C-finite sequences", 0, cmd_cfinite_equal},
      {"verify-bound", "CF TERMS... --bound B: check a recurrence against terms", kFile | kBound, cmd_verify_bound},
      {"moments", "A1 A2 B1 B2 | --file PATH: exact moments of a tile count", kTerms | kMode | kFile | kVar, cmd_moments},
      {"growth", "CF: dominant growth ratio of a C-finite sequence", kGrowth, cmd_growth},
  };
  std::vector<std::pair<CLI::App*, const Entry*>> subs;
  for (const auto& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    add_flags(sub, o, e.flags);
    subs.emplace_back(sub, &e);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 1;
  }

  for (const auto& [sub, entry] : subs) {
    if (!sub->parsed()) continue;
    o.params = sub->remaining();
    for (const auto& p : o.params) {
      if (p.size() > 2 && p.rfind("--", 0) == 0) {
        err << "error: unknown option " << p << "\n" << sub->help();
        return 1;
      }
    }
    try {
      entry->body(o, out);
      return 0;
    } catch (const UsageError& e) {
      err << "error: " << e.what() << "\n" << sub->help();
      return 1;
    } catch (const RegionParseError& e) {
      err << "error: " << e.what() << "\n";
      return 1;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    }
  }
  return 1;
}

}  // namespace tilecount::cli
