// skewpat: counting, enumeration, bijections and self-checks for pattern
// avoidance in reading words of standard skew tableaux.
//
// Exit codes: 0 success, 1 domain error, 2 usage error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "skewpat/skewpat.hpp"

using namespace skewpat;
using OJson = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Inline JSON, @file, or - for standard input.
Json read_json_arg(const std::string& arg, const char* flag) {
  std::string text;
  if (arg == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw DomainError(std::string("cannot read ") + flag + " file '" + arg.substr(1) + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    text = arg;
  }
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw DomainError(std::string("malformed JSON for ") + flag + ": " + e.what());
  }
}

template <class T>
T json_as(const Json& j, const char* flag) {
  try {
    return j.get<T>();
  } catch (const Json::exception& e) {
    throw DomainError(std::string("bad ") + flag + " value: " + e.what());
  }
}

// Exact counts: JSON numbers while they fit in 64 bits, strings beyond.
OJson count_json(const BigCount& c) {
  if (c <= BigCount(std::numeric_limits<std::uint64_t>::max())) {
    return OJson(c.convert_to<std::uint64_t>());
  }
  return OJson(to_decimal(c));
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

int bound_or_env(int flag) { return flag > 0 ? flag : max_boxes_from_env(); }

// ---------------------------------------------------------------------------
// count
// ---------------------------------------------------------------------------

struct CountArgs {
  std::string shape, cls, pattern, method = "auto", format = "json";
  bool check = false;
  int max_boxes = 0;
};

std::optional<BigCount> shape_formula(const SkewShape& s, const Permutation& p, bool& experimental) {
  std::string key = p.to_string();
  if (key == "213") return count_213(s);
  if (key == "132") return count_132(s);
  if (key == "312") return count_312(s);
  if (key == "231") return count_231(s);
  if (key == "123") return count_123(s);
  if (key == "321") {
    experimental = true;
    return count_321(s);
  }
  return std::nullopt;
}

std::optional<BigCount> class_formula(const ClassSpec& c, const Permutation& p, bool& experimental) {
  if (p == Permutation::identity(c.k + 1)) return count_class_monotone(c, c.k + 1);
  if (p == Permutation::identity(c.k + 2)) return count_class_monotone(c, c.k + 2);
  return shape_formula(normalize_shape(class_shape(c)), p, experimental);
}

template <class Key>
BigCount count_images(const std::vector<Key>& images) {
  std::set<Key> distinct(images.begin(), images.end());
  return BigCount(distinct.size());
}

std::optional<BigCount> shape_bijection(const SkewShape& s, const Permutation& p, int bound) {
  std::string key = p.to_string();
  std::function<Partition(const SkewTableau&)> fwd;
  std::function<Partition(const SkewShape&)> target;
  if (key == "213") {
    fwd = [](const SkewTableau& t) { return map_213(t); };
    target = tau_bound_213;
  } else if (key == "132") {
    fwd = map_132, target = tau_bound_132;
  } else if (key == "312") {
    fwd = map_312, target = tau_bound_312;
  } else if (key == "231") {
    fwd = map_231, target = tau_bound_231;
  } else {
    return std::nullopt;
  }
  require_basic_shape(s, "count");
  if ((key == "312" || key == "231") && s.has_square()) return BigCount(0);
  Partition mu = target(s);
  std::vector<std::vector<int>> images;
  for_each_syt(
      s,
      [&](const SkewTableau& t) {
        if (contains_pattern(reading_word(t), p)) return;
        Partition tau = fwd(t);
        if (!mu.contains(tau)) throw DomainError("image " + tau.to_string() + " escapes " + mu.to_string());
        images.push_back({tau.parts().begin(), tau.parts().end()});
      },
      bound);
  return count_images(images);
}

std::optional<BigCount> class_bijection(const ClassSpec& c, const Permutation& p, int bound) {
  bool low = p == Permutation::identity(c.k + 1);
  bool high = p == Permutation::identity(c.k + 2);
  if (!low && !high) {
    return shape_bijection(normalize_shape(class_shape(c)), p, bound);
  }
  SkewShape target(low ? rect_target_shape(c) : k2_target_shape(c));
  std::vector<Rows> images;
  for_each_syt_word(
      class_shape(c),
      [&](std::span<const int> wv) {
        Permutation w(std::vector<int>(wv.begin(), wv.end()));
        if (contains_pattern(w, p)) return;
        SkewTableau t = low ? rect_bijection(w, c) : k2_bijection(w, c);
        if (t.shape() != target) throw DomainError("image has shape " + t.shape().to_string());
        images.push_back(t.rows());
      },
      bound);
  return count_images(images);
}

int run_count(const CountArgs& a) {
  if (a.shape.empty() == a.cls.empty()) throw UsageError("count needs exactly one of --shape or --class");
  int bound = bound_or_env(a.max_boxes);
  Permutation p = parse_permutation(a.pattern);
  std::optional<SkewShape> shape;
  std::optional<ClassSpec> cls;
  std::string input;
  if (!a.shape.empty()) {
    shape = parse_shape(a.shape);
    input = shape->to_string();
  } else {
    cls = parse_class(a.cls);
    input = cls->to_string();
  }
  bool experimental = false;
  auto oracle = [&] {
    return shape ? count_avoiders(*shape, p, bound) : count_class_avoiders(*cls, p, bound);
  };
  auto formula = [&] {
    return shape ? shape_formula(*shape, p, experimental) : class_formula(*cls, p, experimental);
  };
  auto bijection = [&] {
    return shape ? shape_bijection(*shape, p, bound) : class_bijection(*cls, p, bound);
  };
  std::string method = a.method;
  BigCount count;
  if (method == "auto") {
    auto f = formula();
    method = f ? "formula" : "oracle";
    count = f ? *f : oracle();
  } else if (method == "oracle") {
    count = oracle();
  } else if (method == "formula") {
    auto f = formula();
    if (!f) throw DomainError("no closed formula for pattern " + p.to_string() + " on " + input);
    count = *f;
  } else {
    auto b = bijection();
    if (!b) throw DomainError("no bijection for pattern " + p.to_string() + " on " + input);
    count = *b;
  }
  std::optional<BigCount> checked;
  if (a.check) {
    std::optional<BigCount> other = method == "oracle" ? formula() : std::optional<BigCount>(oracle());
    if (!other) throw DomainError("--check: no formula to compare the oracle against");
    checked = *other;
    if (*other != count) {
      std::cerr << "skewpat: check failed: " << method << " gives " << to_decimal(count)
                << " but " << (method == "oracle" ? "formula" : "oracle") << " gives "
                << to_decimal(*other) << "\n";
      return 1;
    }
  }
  if (a.format == "csv") {
    std::cout << "input,pattern,method,count\n"
              << csv_field(input) << ',' << csv_field(p.to_string()) << ',' << method << ','
              << to_decimal(count) << "\n";
  } else if (a.format == "text") {
    std::cout << input << "  " << p.to_string() << "  " << method << "  " << to_decimal(count)
              << (experimental ? "  (experimental)" : "") << (checked ? "  (checked)" : "") << "\n";
  } else {
    OJson j;
    j["input"] = input;
    j["pattern"] = p.to_string();
    j["method"] = method;
    j["count"] = count_json(count);
    if (experimental) j["experimental"] = true;
    if (checked) j["checked"] = true;
    std::cout << j.dump() << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// enumerate
// ---------------------------------------------------------------------------

struct EnumerateArgs {
  std::string shape, cls, avoid, format = "json";
  int max_boxes = 0;
};

int run_enumerate(const EnumerateArgs& a) {
  if (a.shape.empty() == a.cls.empty()) {
    throw UsageError("enumerate needs exactly one of --shape or --class");
  }
  int bound = bound_or_env(a.max_boxes);
  std::optional<Permutation> avoid;
  if (!a.avoid.empty()) avoid = parse_permutation(a.avoid);
  auto keep = [&](const Permutation& w) { return !avoid || !contains_pattern(w, *avoid); };
  if (!a.shape.empty()) {
    SkewShape s = parse_shape(a.shape);
    std::vector<SkewTableau> tabs;
    for (auto& t : all_syt(s, bound)) {
      if (keep(reading_word(t))) tabs.push_back(std::move(t));
    }
    if (a.format == "text") {
      for (std::size_t i = 0; i < tabs.size(); ++i) std::cout << (i ? "\n" : "") << render(tabs[i]);
    } else {
      std::cout << Json(tabs).dump() << "\n";
    }
    return 0;
  }
  ClassSpec c = parse_class(a.cls);
  std::vector<Permutation> words;
  for (auto& w : all_class(c, bound)) {
    if (keep(w)) words.push_back(std::move(w));
  }
  std::sort(words.begin(), words.end());
  if (a.format == "text") {
    for (const auto& w : words) std::cout << w.to_string() << "\n";
  } else {
    std::cout << Json(words).dump() << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// map
// ---------------------------------------------------------------------------

struct MapArgs {
  std::string kind, word, cls, tableau, pair, good, shape, tau, slide_kind = "through";
  int row = -1, delta = 1;
  bool inverse = false, trace = false;
};

void emit_trace(const MapArgs& a, const OJson& j) {
  if (a.trace) std::cout << j.dump() << "\n";
}

Permutation need_word(const MapArgs& a) {
  if (a.word.empty()) throw UsageError("map " + a.kind + " needs --word");
  return parse_permutation(a.word);
}
ClassSpec need_class(const MapArgs& a) {
  if (a.cls.empty()) throw UsageError("map " + a.kind + " needs --class");
  return parse_class(a.cls);
}
SkewTableau need_tableau(const MapArgs& a) {
  if (a.tableau.empty()) throw UsageError("map " + a.kind + " needs --tableau");
  return json_as<SkewTableau>(read_json_arg(a.tableau, "--tableau"), "--tableau");
}
GoodTableau need_good(const MapArgs& a) {
  if (a.good.empty()) throw UsageError("map " + a.kind + " needs --good");
  return json_as<GoodTableau>(read_json_arg(a.good, "--good"), "--good");
}
SkewShape need_shape(const MapArgs& a) {
  if (a.shape.empty()) throw UsageError("map " + a.kind + " needs --shape");
  return parse_shape(a.shape);
}
Partition need_tau(const MapArgs& a) {
  return parse_partition(a.tau);
}

OJson mrsk_step_json(const MrskStep& s) {
  return OJson{{"block", s.block},
               {"shape", Json(s.shape)},
               {"missing", s.missing},
               {"R", Json(s.R)}};
}

OJson split_json(const Split213& s) {
  return OJson{{"depth", s.depth}, {"shape", Json(s.shape)}, {"row", s.row}, {"tau", Json(s.tau)}};
}

Json run_map_kind(const MapArgs& a) {
  const std::string& k = a.kind;
  if (k == "rsk") {
    if (a.inverse) {
      if (a.pair.empty()) throw UsageError("map rsk --inverse needs --pair");
      Json j = read_json_arg(a.pair, "--pair");
      return rsk_inverse(json_as<SkewTableau>(j.at("P"), "P"), json_as<SkewTableau>(j.at("Q"), "Q"));
    }
    Permutation w = need_word(a);
    RskPair pq = rsk(w, [&](int step, int value, const std::vector<Cell>& path, const Rows& p) {
      OJson cells = OJson::array();
      for (const Cell& c : path) cells.push_back({c.row, c.col});
      emit_trace(a, OJson{{"step", step}, {"value", value}, {"path", cells},
                          {"shape", Json(row_shape(p))}});
    });
    return Json{{"P", pq.P}, {"Q", pq.Q}};
  }
  if (k == "mrsk" || k == "mrsk-odd") {
    ClassSpec c = need_class(a);
    bool odd = k == "mrsk-odd";
    if (a.inverse) {
      if (a.pair.empty()) throw UsageError("map " + k + " --inverse needs --pair");
      auto pr = json_as<TableauPair>(read_json_arg(a.pair, "--pair"), "--pair");
      return odd ? modified_rsk_odd_inverse(pr, c) : modified_rsk_inverse(pr, c);
    }
    Permutation w = need_word(a);
    auto obs = [&](const MrskStep& s) { emit_trace(a, mrsk_step_json(s)); };
    return odd ? modified_rsk_odd(w, c, obs) : modified_rsk(w, c, obs);
  }
  if (k == "doubly") {
    ClassSpec c = need_class(a);
    return a.inverse ? doubly_map_inverse(need_word(a), c) : doubly_map(need_word(a), c);
  }
  if (k == "rect") {
    ClassSpec c = need_class(a);
    if (a.inverse) return rect_inverse(need_tableau(a), c);
    return rect_bijection(need_word(a), c);
  }
  if (k == "good") return good_of_perm(need_word(a), need_class(a));
  if (k == "good-inv") {
    GoodTrace tr;
    Permutation w = perm_of_good(need_good(a), need_class(a), &tr);
    for (std::size_t i = 0; i < tr.omitted.size(); ++i) {
      emit_trace(a, OJson{{"row", i}, {"omitted", tr.omitted[i]}, {"image", tr.image[i]}});
    }
    return w;
  }
  if (k == "syt2good") return syt_to_good(need_tableau(a));
  if (k == "good2syt") return good_to_syt(need_good(a));
  if (k == "k2") {
    ClassSpec c = need_class(a);
    if (a.inverse) return k2_inverse(need_tableau(a), c);
    return k2_bijection(need_word(a), c);
  }
  auto obs213 = [&](const Split213& s) { emit_trace(a, split_json(s)); };
  if (k == "p213") return map_213(need_tableau(a), obs213);
  if (k == "p213-inv") return build_213(need_shape(a), need_tau(a), obs213);
  if (k == "p132") return a.inverse ? Json(build_132(need_shape(a), need_tau(a))) : Json(map_132(need_tableau(a)));
  if (k == "p312") return a.inverse ? Json(build_312(need_shape(a), need_tau(a))) : Json(map_312(need_tableau(a)));
  if (k == "p231") return a.inverse ? Json(build_231(need_shape(a), need_tau(a))) : Json(map_231(need_tableau(a)));
  if (k == "slide") {
    if (a.row < 0) throw UsageError("map slide needs --row");
    SlideKind kind = a.slide_kind == "above" ? SlideKind::above_row : SlideKind::through_row;
    if (!a.tableau.empty()) return transport(need_tableau(a), a.row, kind, a.delta);
    return slide_move(need_shape(a), a.row, kind, a.delta);
  }
  throw UsageError("unknown map kind '" + k + "'");
}

int run_map(const MapArgs& a) {
  Json out = run_map_kind(a);
  std::cout << out.dump() << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// verify, render
// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::vector<std::string> suites;
  int max_boxes = 8, jobs = 0;
  std::string format = "text";
};

int run_verify(const VerifyArgs& a) {
  std::vector<std::string> names = a.suites.empty() ? std::vector<std::string>{"all"} : a.suites;
  auto checks = select_checks(names);
  if (checks.empty()) throw UsageError("no verification suite matches the given names");
  VerifyOptions o{a.max_boxes, a.jobs};
  int failed = 0;
  OJson arr = OJson::array();
  run_checks(checks, o, [&](const CheckResult& r) {
    if (!r.passed) ++failed;
    if (a.format == "json") {
      arr.push_back(OJson{{"suite", r.suite}, {"name", r.name}, {"passed", r.passed},
                          {"detail", r.detail}});
    } else {
      std::cout << format_result(r) << std::endl;
    }
  });
  if (a.format == "json") {
    std::cout << arr.dump() << "\n";
  } else {
    std::cout << (checks.size() - failed) << "/" << checks.size() << " checks passed\n";
  }
  return failed == 0 ? 0 : 1;
}

struct RenderArgs {
  std::string tableau, shape, good;
};

int run_render(const RenderArgs& a) {
  int given = !a.tableau.empty() + !a.shape.empty() + !a.good.empty();
  if (given != 1) throw UsageError("render needs exactly one of --tableau, --shape or --good");
  if (!a.shape.empty()) {
    std::cout << render(parse_shape(a.shape));
  } else if (!a.tableau.empty()) {
    std::cout << render(json_as<SkewTableau>(read_json_arg(a.tableau, "--tableau"), "--tableau"));
  } else {
    std::cout << render(json_as<GoodTableau>(read_json_arg(a.good, "--good"), "--good").rows);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pattern avoidance in reading words of standard skew tableaux"};
  app.require_subcommand(1);

  CountArgs ca;
  auto* count = app.add_subcommand("count", "count tableaux or class words avoiding a pattern");
  count->add_option("--shape", ca.shape, "skew shape, e.g. 3,2/2");
  count->add_option("--class", ca.cls, "class, e.g. n=2,k=2,r=0");
  count->add_option("--pattern", ca.pattern, "pattern, e.g. 213")->required();
  count->add_option("--method", ca.method, "oracle, formula, bijection (default: formula when known)")
      ->check(CLI::IsMember({"auto", "oracle", "formula", "bijection"}));
  count->add_flag("--check", ca.check, "cross-check against the oracle (or the formula)");
  count->add_option("--format", ca.format)->check(CLI::IsMember({"json", "csv", "text"}));
  count->add_option("--max-boxes", ca.max_boxes, "enumeration bound");

  EnumerateArgs ea;
  auto* en = app.add_subcommand("enumerate", "list tableaux of a shape or words of a class");
  en->add_option("--shape", ea.shape);
  en->add_option("--class", ea.cls);
  en->add_option("--avoid", ea.avoid, "keep only reading words avoiding this pattern");
  en->add_option("--format", ea.format)->check(CLI::IsMember({"json", "text"}));
  en->add_option("--max-boxes", ea.max_boxes);

  MapArgs ma;
  auto* map = app.add_subcommand("map", "apply a bijection");
  map->add_option("map", ma.kind, "rsk mrsk mrsk-odd doubly rect good good-inv syt2good good2syt "
                                   "k2 p213 p213-inv p132 p312 p231 slide")
      ->required()
      ->check(CLI::IsMember({"rsk", "mrsk", "mrsk-odd", "doubly", "rect", "good", "good-inv",
                             "syt2good", "good2syt", "k2", "p213", "p213-inv", "p132", "p312",
                             "p231", "slide"}));
  map->add_option("--word", ma.word);
  map->add_option("--class", ma.cls);
  map->add_option("--tableau", ma.tableau, "tableau JSON, @file or -");
  map->add_option("--pair", ma.pair, "pair JSON, @file or -");
  map->add_option("--good", ma.good, "good tableau JSON, @file or -");
  map->add_option("--shape", ma.shape);
  map->add_option("--tau", ma.tau, "partition, e.g. 2,1");
  map->add_option("--row", ma.row, "0-based row for slide");
  map->add_option("--kind", ma.slide_kind)->check(CLI::IsMember({"through", "above"}));
  map->add_option("--delta", ma.delta)->check(CLI::IsMember({-1, 1}));
  map->add_flag("--inverse", ma.inverse);
  map->add_flag("--trace", ma.trace, "print each step as a JSON line before the result");

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "run exhaustive self-checks");
  ver->add_option("suites", va.suites, "all, acceptance, core, enumerate, counting, rsk, bijections, A1..A9");
  ver->add_option("--max-boxes", va.max_boxes)->check(CLI::Range(1, 10));
  ver->add_option("--jobs", va.jobs)->check(CLI::NonNegativeNumber);
  ver->add_option("--format", va.format)->check(CLI::IsMember({"json", "text"}));

  RenderArgs ra;
  auto* ren = app.add_subcommand("render", "draw a tableau or shape, first row on top");
  ren->add_option("--tableau", ra.tableau);
  ren->add_option("--shape", ra.shape);
  ren->add_option("--good", ra.good);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (count->parsed()) return run_count(ca);
    if (en->parsed()) return run_enumerate(ea);
    if (map->parsed()) return run_map(ma);
    if (ver->parsed()) return run_verify(va);
    if (ren->parsed()) return run_render(ra);
  } catch (const UsageError& e) {
    std::cerr << "skewpat: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "skewpat: " << e.what() << "\n";
    return 1;
  } catch (const Json::exception& e) {
    std::cerr << "skewpat: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
