#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "charvar/errors.hpp"
#include "charvar/io.hpp"
#include "charvar/job.hpp"

namespace {

struct Args {
  std::string ideal, vars, pres, apoly, f, element, word, eliminate, report;
  std::vector<std::string> slopes;
};

void add_inputs(CLI::App* cmd, Args& a, charvar::Request& r) {
  cmd->add_option("--ideal", a.ideal, "ideal file, one generator per line or ';' separated")->check(CLI::ExistingFile);
  cmd->add_option("--vars", a.vars, "comma separated variable list for --ideal");
  cmd->add_option("--pres", a.pres, "presentation file (relator, mu, lambda)")->check(CLI::ExistingFile);
  cmd->add_option("--apoly", a.apoly, "A-polynomial file in L, M")->check(CLI::ExistingFile);
  cmd->add_option("--f", a.f, "polynomial playing the role of the trace function");
  cmd->add_option("--g", a.element, "element whose minimal polynomial over Q(f) is reported");
  cmd->add_option("--word", a.word, "group word over a, b, A, B");
  cmd->add_option("--slope", a.slopes, "slope p/q (repeatable)");
  cmd->add_option("--order", r.config.order, "grevlex or lex")->capture_default_str();
  cmd->add_option("--eliminate", a.eliminate, "comma separated variables to eliminate");
  cmd->add_option("--max-degree", r.config.max_degree, "degree cap for Groebner computations")->capture_default_str();
  cmd->add_option("--max-pairs", r.config.max_pairs, "S-pair cap")->capture_default_str();
  cmd->add_option("--threads", r.config.threads, "worker threads")->capture_default_str();
  cmd->add_option("--seed", r.config.seed, "seed for primitive element search")->capture_default_str();
  cmd->add_flag("--strip-content", r.config.strip_content, "divide the A-polynomial by its content");
  cmd->add_flag("--strip-abelian-factor", r.config.strip_abelian_factor, "divide the A-polynomial by L - 1");
  cmd->add_flag("--primitive", r.primitive, "search for a primitive element");
  cmd->add_option("--rank-q", r.rank_q, "rank over Q[f]");
  cmd->add_option("--norm", r.norm, "Culler-Shalen norm value");
  cmd->add_flag("--exclude-trivial", r.exclude_trivial, "drop the candidate degree 1");
  cmd->add_option("--min-norm", r.min_norm, "smallest admissible norm for candidates")->capture_default_str();
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    auto end = s.find(',', start);
    if (end == std::string::npos) end = s.size();
    if (end > start) out.push_back(s.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

charvar::Request build(const std::string& command, const Args& a, charvar::Request r) {
  r.command = command;
  if (!a.ideal.empty()) r.ideal = charvar::read_file(a.ideal);
  if (!a.vars.empty()) r.variables = a.vars;
  if (!a.pres.empty()) r.presentation = charvar::read_file(a.pres);
  if (!a.apoly.empty()) r.apolynomial = charvar::read_file(a.apoly);
  if (!a.f.empty()) r.f = a.f;
  if (!a.element.empty()) r.element = a.element;
  if (!a.word.empty()) r.word = a.word;
  r.config.eliminate = split_commas(a.eliminate);
  for (const auto& s : a.slopes) r.config.slopes.push_back(charvar::Slope::parse(s));
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Character varieties, trace functions and Culler-Shalen norms"};
  app.require_subcommand(1);
  app.set_version_flag("--version", charvar::tool_version);

  Args args;
  charvar::Request base;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"trace", "trace polynomial of a word, or slope traces of a presentation"},
      {"ideal", "character ideal or ideal file: Groebner basis, elimination, dimension"},
      {"rank", "module rank over Q[f], minimal polynomials, slope classification"},
      {"newton", "Newton polygon of an A-polynomial"},
      {"slopes", "boundary slopes from the Newton polygon"},
      {"norm", "Culler-Shalen norm of slopes"},
      {"ball", "unit ball of the Culler-Shalen norm"},
      {"fod", "field of definition degree from ranks and norms"},
      {"validate", "cross-check elimination ranks against polygon norms"}};
  for (const auto& [name, help] : commands) add_inputs(app.add_subcommand(name, help), args, base);
  auto* replay = app.add_subcommand("replay", "re-run the inputs echoed in a report");
  replay->add_option("report", args.report, "report document")->required()->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  charvar::Outcome outcome;
  try {
    CLI::App* chosen = app.get_subcommands().front();
    charvar::Request request;
    if (chosen == replay) {
      const auto doc = nlohmann::json::parse(charvar::read_file(args.report));
      request = charvar::request_from_json(doc.at("inputs"));
    } else {
      request = build(chosen->get_name(), args, base);
    }
    outcome = charvar::run(request);
  } catch (const charvar::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  std::cout << outcome.report.dump(2) << "\n";
  if (outcome.exit_code != 0) std::cerr << "error: " << outcome.report.value("error", outcome.report["status"].get<std::string>()) << "\n";
  return outcome.exit_code;
}
