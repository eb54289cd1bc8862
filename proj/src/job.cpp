#include "charvar/job.hpp"

#include <algorithm>
#include <chrono>
#include <future>

#include "charvar/groebner.hpp"
#include "charvar/io.hpp"
#include "charvar/module_rank.hpp"
#include "charvar/rank_functions.hpp"

namespace charvar {

using nlohmann::ordered_json;

namespace {

template <typename T>
const T& need(const std::optional<T>& v, const char* what) {
  if (!v) throw InputError(std::string("missing required input: ") + what);
  return *v;
}

MonomialOrder::Kind order_kind(const std::string& name) {
  if (name == "grevlex") return MonomialOrder::Kind::GrevLex;
  if (name == "lex") return MonomialOrder::Kind::Lex;
  throw InputError("unknown monomial order '" + name + "' (expected grevlex or lex)");
}

GroebnerLimits limits_of(const JobConfig& c) {
  if (c.max_degree == 0 || c.max_pairs == 0 || c.threads == 0) throw InputError("resource caps must be positive");
  GroebnerLimits l;
  l.max_degree = c.max_degree;
  l.max_pairs = c.max_pairs;
  l.threads = c.threads;
  return l;
}

RankOptions rank_options(const JobConfig& c) {
  RankOptions o;
  o.limits = limits_of(c);
  o.inner_order = order_kind(c.order);
  return o;
}

std::vector<Slope> sorted_slopes(std::vector<Slope> s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

ordered_json strings(const std::vector<Poly>& ps) {
  ordered_json a = ordered_json::array();
  for (const auto& p : ps) a.push_back(to_string(p));
  return a;
}

ordered_json slope_list(const std::vector<Slope>& s) {
  ordered_json a = ordered_json::array();
  for (const auto& x : s) a.push_back(x.to_string());
  return a;
}

std::optional<PresentationFile> load_presentation(const Request& r) {
  if (!r.presentation) return std::nullopt;
  return parse_presentation(*r.presentation);
}

const PeripheralSystem& need_peripheral(const std::optional<PresentationFile>& p) {
  if (!p) throw InputError("missing required input: presentation");
  if (!p->peripheral) throw InputError("presentation has no mu/lambda lines");
  return *p->peripheral;
}

/// The ideal file over --vars, or else the character ideal of the presentation.
Ideal load_ideal(const Request& r, const std::optional<PresentationFile>& pres) {
  if (r.ideal) return parse_ideal(*r.ideal, Variables::parse(need(r.variables, "variables")));
  if (pres) return character_ideal(pres->presentation);
  throw InputError("missing required input: ideal or presentation");
}

APolynomialFile load_apolynomial(const Request& r) {
  APolynomialFile a = parse_apolynomial(need(r.apolynomial, "A-polynomial"));
  if (r.config.strip_content && !a.strip_content) {
    a.polynomial.strip_content();
    a.strip_content = true;
  }
  if (r.config.strip_abelian_factor && !a.strip_abelian_factor) {
    a.polynomial.strip_abelian_factor();
    a.strip_abelian_factor = true;
  }
  return a;
}

ordered_json polygon_json(const APolynomialFile& a, const NewtonPolygon& P) {
  ordered_json j;
  j["polynomial"] = to_string(a.polynomial.polynomial());
  j["normalizations"] = a.polynomial.normalizations();
  ordered_json v = ordered_json::array();
  for (const auto& p : P.vertices()) v.push_back(to_string(p));
  j["vertices"] = v;
  return j;
}

ordered_json report_json(const RankReport& r) {
  ordered_json j;
  j["slope"] = r.slope.to_string();
  j["outcome"] = r.rank ? "Finite(" + std::to_string(*r.rank) + ")" : "Infinite";
  if (r.rank) j["rank"] = std::to_string(*r.rank);
  j["path"] = to_string(r.path);
  j["detected"] = r.detected;
  ordered_json a = ordered_json::array();
  for (const auto& x : r.assumptions) a.push_back({{"statement", x.statement}, {"status", to_string(x.status)}});
  j["assumptions"] = a;
  if (r.non_integral) j["non_integral"] = to_string(*r.non_integral);
  if (r.trace) j["trace"] = to_string(*r.trace);
  return j;
}

ordered_json rank_json(const RankResult& r) {
  ordered_json j;
  j["outcome"] = r.rank ? "Finite(" + std::to_string(*r.rank) + ")" : "Infinite";
  if (r.rank) {
    j["rank"] = std::to_string(*r.rank);
    j["basis"] = strings(r.basis);
  }
  if (r.non_integral) j["non_integral"] = to_string(*r.non_integral);
  return j;
}

ordered_json cmd_trace(const Request& r) {
  ordered_json j;
  if (r.word) j["trace"] = to_string(trace_polynomial(GroupWord::parse(*r.word)));
  if (!r.config.slopes.empty()) {
    const auto pres = load_presentation(r);
    const auto& ps = need_peripheral(pres);
    ordered_json a = ordered_json::array();
    for (const auto& s : sorted_slopes(r.config.slopes))
      a.push_back({{"slope", s.to_string()}, {"trace", to_string(slope_trace(ps, s))}});
    j["slope_traces"] = a;
  }
  if (j.empty()) throw InputError("trace needs a word or a presentation with slopes");
  return j;
}

ordered_json cmd_ideal(const Request& r) {
  const auto pres = load_presentation(r);
  const Ideal I = load_ideal(r, pres);
  const GroebnerLimits limits = limits_of(r.config);
  ordered_json j;
  j["variables"] = join(I.variables());
  j["generators"] = strings(I.generators());
  Ideal target = I;
  if (!r.config.eliminate.empty()) {
    target = eliminate(I, r.config.eliminate, limits);
    j["eliminated"] = r.config.eliminate;
    j["elimination_variables"] = join(target.variables());
    j["elimination_ideal"] = strings(target.generators());
  }
  const MonomialOrder order =
      order_kind(r.config.order) == MonomialOrder::Kind::Lex ? MonomialOrder::lex() : MonomialOrder::grevlex();
  const GroebnerBasis g = groebner(target, order, limits);
  j["order"] = order.describe(target.variables());
  j["groebner_basis"] = strings(g.basis());
  if (g.is_unit()) {
    j["krull_dimension"] = "empty variety";
  } else {
    j["krull_dimension"] = std::to_string(krull_dimension(target, limits));
  }
  return j;
}

std::vector<RankReport> classify_all(const Ideal& I, const PeripheralSystem& ps, const std::vector<Slope>& slopes,
                                     const RankOptions& options, const NewtonPolygon* P) {
  std::vector<RankReport> out(slopes.size());
  if (options.limits.threads > 1 && slopes.size() > 1) {
    RankOptions inner = options;
    inner.limits.threads = 1;
    std::vector<std::future<RankReport>> jobs;
    for (const auto& s : slopes)
      jobs.push_back(std::async(std::launch::async, [&, s] { return classify_slope(I, ps, s, inner, P); }));
    for (std::size_t k = 0; k < jobs.size(); ++k) out[k] = jobs[k].get();
  } else {
    for (std::size_t k = 0; k < slopes.size(); ++k) out[k] = classify_slope(I, ps, slopes[k], options, P);
  }
  return out;
}

ordered_json cmd_rank(const Request& r) {
  const auto pres = load_presentation(r);
  const Ideal I = load_ideal(r, pres);
  const RankOptions options = rank_options(r.config);
  ordered_json j;
  j["variables"] = join(I.variables());
  if (r.f) {
    const Poly f = parse_polynomial(*r.f, I.variables());
    j["f"] = to_string(f);
    j["module_rank"] = rank_json(module_rank(I, f, options));
    if (r.element) {
      const Poly g = parse_polynomial(*r.element, I.variables());
      const MinimalPolynomial m = minimal_polynomial(g, I, f, options);
      j["minimal_polynomial"] = {{"element", to_string(g)},
                                 {"polynomial", m.value.to_string()},
                                 {"degree", std::to_string(m.degree())},
                                 {"integral", m.value.has_polynomial_coefficients()}};
    }
    if (r.primitive) {
      const PrimitiveElement p = primitive_element(I, f, r.config.seed, options);
      j["primitive_element"] = {{"element", to_string(p.combination)},
                                {"minimal_polynomial", p.minimal.value.to_string()},
                                {"degree", std::to_string(p.minimal.degree())}};
    }
    return j;
  }
  if (r.config.slopes.empty()) throw InputError("rank needs f or a slope list");
  const auto& ps = need_peripheral(pres);
  const auto slopes = sorted_slopes(r.config.slopes);
  ordered_json a = ordered_json::array();
  for (const auto& rep : classify_all(I, ps, slopes, options, nullptr)) a.push_back(report_json(rep));
  j["reports"] = a;
  return j;
}

ordered_json cmd_newton(const Request& r) {
  const auto a = load_apolynomial(r);
  return polygon_json(a, newton_polygon(a.polynomial));
}

ordered_json cmd_slopes(const Request& r) {
  const auto a = load_apolynomial(r);
  const auto P = newton_polygon(a.polynomial);
  ordered_json j = polygon_json(a, P);
  j["boundary_slopes"] = slope_list(boundary_slopes(P));
  return j;
}

ordered_json cmd_norm(const Request& r) {
  const auto a = load_apolynomial(r);
  const auto P = newton_polygon(a.polynomial);
  if (r.config.slopes.empty()) throw InputError("norm needs at least one slope");
  ordered_json j = polygon_json(a, P);
  ordered_json n = ordered_json::array();
  for (const auto& s : sorted_slopes(r.config.slopes))
    n.push_back({{"slope", s.to_string()}, {"norm", std::to_string(cs_norm(P, s))}});
  j["norms"] = n;
  return j;
}

ordered_json cmd_ball(const Request& r) {
  const auto a = load_apolynomial(r);
  const auto P = newton_polygon(a.polynomial);
  const NormBall ball = norm_ball(P);
  ordered_json j = polygon_json(a, P);
  ordered_json v = ordered_json::array();
  for (const auto& x : ball.vertices) v.push_back(to_string(x));
  j["ball_vertices"] = v;
  j["is_norm"] = ball.is_norm;
  if (ball.kernel) j["kernel"] = ball.kernel->to_string();
  if (ball.strip) j["strip"] = "|v . " + to_string(*ball.strip) + "| <= 1";
  return j;
}

ordered_json cmd_fod(const Request& r) {
  const std::uint64_t rank = need(r.rank_q, "rank over Q");
  ordered_json j;
  j["rank_q"] = std::to_string(rank);
  if (r.norm) {
    j["norm"] = std::to_string(*r.norm);
    j["fod_degree"] = std::to_string(fod_degree(rank, *r.norm));
    return j;
  }
  ordered_json c = ordered_json::array();
  for (const auto& x : fod_candidates(rank, r.exclude_trivial, r.min_norm))
    c.push_back({{"degree", std::to_string(x.degree)}, {"norm", std::to_string(x.norm)}});
  j["exclude_trivial"] = r.exclude_trivial;
  j["min_norm"] = std::to_string(r.min_norm);
  j["candidates"] = c;
  return j;
}

ordered_json cmd_validate(const Request& r, int& exit_code) {
  const auto pres = load_presentation(r);
  const Ideal I = load_ideal(r, pres);
  const auto& ps = need_peripheral(pres);
  const auto a = load_apolynomial(r);
  const auto P = newton_polygon(a.polynomial);
  const CrossValidation cv = cross_validate(I, ps, P, r.config.slopes, rank_options(r.config));
  ordered_json j = polygon_json(a, P);
  if (P.size() > 1) j["boundary_slopes"] = slope_list(boundary_slopes(P));
  ordered_json e = ordered_json::array();
  for (const auto& entry : cv.entries) {
    ordered_json x = report_json(entry.report);
    x["norm"] = std::to_string(entry.norm);
    if (entry.quotient) x["quotient"] = std::to_string(*entry.quotient);
    e.push_back(x);
  }
  j["slopes"] = e;
  j["consistent"] = cv.consistent;
  if (cv.degree) j["fod_degree"] = std::to_string(*cv.degree);
  if (!cv.message.empty()) j["message"] = cv.message;
  j["all_sampled_infinite"] = cv.all_sampled_infinite;
  if (!cv.consistent) exit_code = 3;
  return j;
}

template <typename T>
void put(ordered_json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
}

template <typename T>
void get(const nlohmann::json& j, const char* key, std::optional<T>& v) {
  if (j.contains(key)) v = j.at(key).get<T>();
}

}  // namespace

ordered_json to_json(const Request& r) {
  ordered_json j;
  j["command"] = r.command;
  const JobConfig& c = r.config;
  j["config"] = {{"order", c.order},
                 {"eliminate", c.eliminate},
                 {"max_degree", c.max_degree},
                 {"max_pairs", c.max_pairs},
                 {"threads", c.threads},
                 {"seed", c.seed},
                 {"slopes", slope_list(c.slopes)},
                 {"strip_content", c.strip_content},
                 {"strip_abelian_factor", c.strip_abelian_factor}};
  put(j, "ideal", r.ideal);
  put(j, "variables", r.variables);
  put(j, "presentation", r.presentation);
  put(j, "apolynomial", r.apolynomial);
  put(j, "f", r.f);
  put(j, "element", r.element);
  put(j, "word", r.word);
  j["primitive"] = r.primitive;
  put(j, "rank_q", r.rank_q);
  put(j, "norm", r.norm);
  j["exclude_trivial"] = r.exclude_trivial;
  j["min_norm"] = r.min_norm;
  return j;
}

Request request_from_json(const nlohmann::json& j) {
  try {
    Request r;
    r.command = j.at("command").get<std::string>();
    const auto& c = j.at("config");
    r.config.order = c.at("order").get<std::string>();
    r.config.eliminate = c.at("eliminate").get<std::vector<std::string>>();
    r.config.max_degree = c.at("max_degree").get<unsigned>();
    r.config.max_pairs = c.at("max_pairs").get<std::uint64_t>();
    r.config.threads = c.at("threads").get<unsigned>();
    r.config.seed = c.at("seed").get<std::uint64_t>();
    for (const auto& s : c.at("slopes")) r.config.slopes.push_back(Slope::parse(s.get<std::string>()));
    r.config.strip_content = c.at("strip_content").get<bool>();
    r.config.strip_abelian_factor = c.at("strip_abelian_factor").get<bool>();
    get(j, "ideal", r.ideal);
    get(j, "variables", r.variables);
    get(j, "presentation", r.presentation);
    get(j, "apolynomial", r.apolynomial);
    get(j, "f", r.f);
    get(j, "element", r.element);
    get(j, "word", r.word);
    r.primitive = j.value("primitive", false);
    get(j, "rank_q", r.rank_q);
    get(j, "norm", r.norm);
    r.exclude_trivial = j.value("exclude_trivial", false);
    r.min_norm = j.value("min_norm", std::uint64_t{1});
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed request document: ") + e.what());
  }
}

Outcome run(const Request& request) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  ordered_json& doc = out.report;
  doc["tool"] = "charvar";
  doc["version"] = tool_version;
  doc["command"] = request.command;
  doc["inputs"] = to_json(request);
  doc["seed"] = request.config.seed;
  try {
    const std::string& c = request.command;
    ordered_json result;
    if (c == "trace") result = cmd_trace(request);
    else if (c == "ideal") result = cmd_ideal(request);
    else if (c == "rank") result = cmd_rank(request);
    else if (c == "newton") result = cmd_newton(request);
    else if (c == "slopes") result = cmd_slopes(request);
    else if (c == "norm") result = cmd_norm(request);
    else if (c == "ball") result = cmd_ball(request);
    else if (c == "fod") result = cmd_fod(request);
    else if (c == "validate") result = cmd_validate(request, out.exit_code);
    else throw InputError("unknown command '" + c + "'");
    doc["status"] = out.exit_code == 0 ? "ok" : "inconsistent";
    doc["result"] = std::move(result);
  } catch (const InputError& e) {
    out.exit_code = 1;
    doc["status"] = "input_error";
    doc["error"] = e.what();
  } catch (const ResourceCapExceeded& e) {
    out.exit_code = 2;
    doc["status"] = "resource_cap";
    doc["error"] = e.what();
  } catch (const InconsistencyError& e) {
    out.exit_code = 3;
    doc["status"] = "inconsistent";
    doc["error"] = e.what();
  } catch (const std::bad_alloc&) {
    out.exit_code = 2;
    doc["status"] = "resource_cap";
    doc["error"] = "out of memory";
  }
  doc["exit_code"] = out.exit_code;
  const auto ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  doc["timing"] = {{"elapsed_ms", ms}};
  return out;
}

ordered_json without_timing(ordered_json report) {
  report.erase("timing");
  return report;
}

}  // namespace charvar
