#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "staircase/factorization.hpp"
#include "staircase/io.hpp"
#include "staircase/monomial_ideal.hpp"
#include "staircase/monomial_module.hpp"
#include "staircase/render.hpp"
#include "staircase/selftest.hpp"

namespace {

using namespace staircase;

std::string read_input(const std::string& arg) {
  if (arg == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  if (!arg.empty() && arg.front() == '@') {
    std::ifstream file(arg.substr(1));
    if (!file) throw std::runtime_error("cannot read file '" + arg.substr(1) + "'");
    return std::string(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
  }
  return arg;
}

bool ansi_color_enabled() {
  const char* value = std::getenv("STAIRCASE_COLOR");
  return value != nullptr && std::string(value) == "1";
}

Rect parse_rect(const std::string& text) {
  Rect r;
  std::int64_t* fields[4] = {&r.x0, &r.x1, &r.y0, &r.y1};
  std::size_t begin = 0;
  for (int i = 0; i < 4; ++i) {
    const std::size_t end = i == 3 ? text.size() : text.find(':', begin);
    if (end == std::string::npos) throw ParseError("rect must be x0:x1:y0:y1", begin);
    try {
      *fields[i] = std::stoll(text.substr(begin, end - begin));
    } catch (const std::exception&) {
      throw ParseError("rect must be x0:x1:y0:y1", begin);
    }
    begin = end + 1;
  }
  if (r.x0 > r.x1 || r.y0 > r.y1) throw ParseError("rect must be x0:x1:y0:y1 with x0<=x1, y0<=y1", 0);
  return r;
}

// Options shared by the `module` subcommands: an inline generator list, a
// named family, or a stream spec document.
struct ModuleInput {
  std::string text;       // generator list (argument, @file or -)
  std::string family;
  std::optional<std::int64_t> prefix;
  std::string slope;      // powers family: base slope "r/s"
  std::optional<std::int64_t> exponent;
  std::string spec;       // StreamSpec JSON (argument, @file or -)
};

Slope parse_slope(const std::string& text) {
  const std::size_t split = text.find('/');
  if (split == std::string::npos) throw ParseError("slope must look like r/s", 0);
  try {
    return Slope::reduced(std::stoll(text.substr(0, split)), std::stoll(text.substr(split + 1)));
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("slope must look like r/s", 0);
  }
}

std::variant<MonomialModule, FactorStream> load_module(const ModuleInput& input) {
  const int sources = (!input.text.empty() ? 1 : 0) + (!input.family.empty() ? 1 : 0) +
                      (!input.spec.empty() ? 1 : 0);
  if (sources != 1) {
    throw ParseError("give exactly one of: a generator list, --family, or --spec", 0);
  }
  ModuleDescription description;
  if (!input.text.empty()) {
    description.value = parse_generators(read_input(input.text)).points;
  } else if (!input.family.empty()) {
    ModuleDescription::Family family{input.family, input.prefix, {}, input.exponent};
    if (!input.slope.empty()) family.slope = parse_slope(input.slope);
    description.value = std::move(family);
  } else {
    return stream_from_json(read_input(input.spec));
  }
  return admit_module(description);
}

FactorStream as_stream(std::variant<MonomialModule, FactorStream> value) {
  if (auto* stream = std::get_if<FactorStream>(&value)) return std::move(*stream);
  return factor_stream_of_module(std::get<MonomialModule>(value));
}

MonomialModule as_finite_module(std::variant<MonomialModule, FactorStream> value,
                                const char* what) {
  if (auto* m = std::get_if<MonomialModule>(&value)) return std::move(*m);
  const FactorStream& stream = std::get<FactorStream>(value);
  if (stream.right().finite() && stream.left().finite()) {
    return partial_sum(stream, *stream.left().size(), *stream.right().size());
  }
  throw NonAdmissibleModule(std::string(what) +
                            " needs a finite module; cut the family with --prefix first");
}

void add_module_input_options(CLI::App* cmd, ModuleInput& input) {
  cmd->add_option("generators", input.text,
                  "generator list like \"1, x*y^-1\" ('-' reads stdin, '@FILE' reads a file)");
  cmd->add_option("--family", input.family, "named family: triangular, antidiagonal or powers");
  cmd->add_option("--prefix", input.prefix, "finite prefix cut for --family");
  cmd->add_option("--slope", input.slope, "powers family: base slope r/s");
  cmd->add_option("--exponent", input.exponent, "powers family: multiplicity");
  cmd->add_option("--spec", input.spec, "stream spec JSON ('-' reads stdin, '@FILE' reads a file)");
}

std::string describe_stream(const FactorStream& s) {
  std::string out = "anchor " + print_monomial(s.anchor());
  const auto side_text = [](const FactorSide& side) {
    if (!side.finite()) return std::string("infinite family");
    std::string text;
    for (std::int64_t k = 0; k < side.size().value_or(0); ++k) {
      const StreamFactor f = *side.at(k);
      if (!text.empty()) text += "*";
      text += "E[" + f.slope.str() + "]";
      if (f.multiplicity != 1) text += "^" + std::to_string(f.multiplicity);
    }
    return text.empty() ? std::string("1") : text;
  };
  out += "; right: " + side_text(s.right());
  out += "; left: " + side_text(s.left());
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"exact staircase calculator for two-variable monomial ideals and modules"};
  app.require_subcommand(1);

  std::string input_a;
  std::string input_b;
  bool as_json = false;

  auto* cmd_close = app.add_subcommand("close", "integral closure of an ideal or module");
  cmd_close->add_option("ideal", input_a, "generators ('-' reads stdin, '@FILE' reads a file)")
      ->required();
  cmd_close->add_flag("--json", as_json, "emit JSON");

  auto* cmd_factor = app.add_subcommand("factor", "factor an integrally closed ideal");
  cmd_factor->add_option("ideal", input_a, "generators ('-' reads stdin)")->required();
  cmd_factor->add_flag("--json", as_json, "emit JSON");

  auto* cmd_expand = app.add_subcommand("expand", "rebuild the ideal of a factorization");
  cmd_expand->add_option("factors", input_a, "product like \"E[4/3]*E[5/2]^2*x\"")->required();
  cmd_expand->add_flag("--json", as_json, "emit JSON");

  auto* cmd_mul = app.add_subcommand("mul", "multiply two ideals or two factorizations");
  cmd_mul->add_option("a", input_a, "first operand")->required();
  cmd_mul->add_option("b", input_b, "second operand")->required();
  cmd_mul->add_flag("--json", as_json, "emit JSON");

  std::string plot_format = "ascii";
  std::string plot_rect;
  std::string plot_out;
  std::int64_t plot_max_cells = 1 << 16;
  auto* cmd_plot = app.add_subcommand("plot", "draw a staircase diagram");
  cmd_plot->add_option("ideal", input_a, "generators ('-' reads stdin)")->required();
  cmd_plot->add_option("--format", plot_format, "ascii or svg")
      ->check(CLI::IsMember({"ascii", "svg"}));
  cmd_plot->add_option("--rect", plot_rect, "viewport x0:x1:y0:y1 (default: fit)");
  cmd_plot->add_option("--max-cells", plot_max_cells, "viewport size cap");
  cmd_plot->add_option("--out", plot_out, "write to a file instead of stdout");

  auto* cmd_module = app.add_subcommand("module", "operations on monomial modules");
  cmd_module->require_subcommand(1);

  ModuleInput module_input;
  std::int64_t approx_n = 0;
  std::int64_t n_left = -1;
  std::int64_t n_right = -1;
  std::int64_t truncate_a = 0;
  std::string rect_text;
  std::int64_t converge_from = 1;
  std::int64_t converge_to = 8;

  auto* mod_close = cmd_module->add_subcommand("close", "integral closure of a finite module");
  add_module_input_options(mod_close, module_input);
  mod_close->add_flag("--json", as_json, "emit JSON");

  auto* mod_factor = cmd_module->add_subcommand("factor", "factor stream of a finite module");
  add_module_input_options(mod_factor, module_input);
  mod_factor->add_flag("--json", as_json, "emit JSON");

  auto* mod_approx =
      cmd_module->add_subcommand("approx", "partial Minkowski sum of a factor stream");
  add_module_input_options(mod_approx, module_input);
  mod_approx->add_option("--n", approx_n, "factors to take on both sides")->required();
  mod_approx->add_option("--left", n_left, "override the left depth");
  mod_approx->add_option("--right", n_right, "override the right depth");
  mod_approx->add_flag("--json", as_json, "emit JSON");

  auto* mod_truncate =
      cmd_module->add_subcommand("truncate", "quadrant truncation x^a y^a M cap C[x,y]");
  add_module_input_options(mod_truncate, module_input);
  mod_truncate->add_option("--a", truncate_a, "diagonal shift")->required();
  mod_truncate->add_flag("--json", as_json, "emit JSON");

  auto* mod_window = cmd_module->add_subcommand("window", "membership window of a partial sum");
  add_module_input_options(mod_window, module_input);
  mod_window->add_option("--n", approx_n, "factors to take on both sides")->required();
  mod_window->add_option("--rect", rect_text, "window x0:x1:y0:y1")->required();
  mod_window->add_flag("--json", as_json, "emit JSON");

  auto* mod_converge =
      cmd_module->add_subcommand("converge", "window stabilization of the partial sums");
  add_module_input_options(mod_converge, module_input);
  mod_converge->add_option("--rect", rect_text, "window x0:x1:y0:y1")->required();
  mod_converge->add_option("--from", converge_from, "first n (default 1)");
  mod_converge->add_option("--to", converge_to, "last n (default 8)");
  mod_converge->add_flag("--json", as_json, "emit JSON");

  std::uint64_t seed = 1;
  std::int64_t cases = 100;
  std::int64_t r_max = 128;
  auto* cmd_selftest = app.add_subcommand("selftest", "run the randomized property suites");
  cmd_selftest->add_option("--seed", seed, "PRNG seed (default 1)");
  cmd_selftest->add_option("--cases", cases, "instances per suite (default 100)");
  cmd_selftest->add_option("--rmax", r_max, "sumset oracle depth (default 128)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help or the usage error
    return code == 0 ? 0 : 2;
  }

  if (*cmd_close) {
    const ParsedGenerators parsed = parse_generators(read_input(input_a));
    if (parsed.has_negative_exponent) {
      const MonomialModule closed = module_closure(parsed.to_module());
      std::cout << (as_json ? to_json(closed) : print_module(closed)) << "\n";
    } else {
      const MonomialIdeal closed = integral_closure(parsed.to_ideal());
      std::cout << (as_json ? to_json(closed) : print_ideal(closed)) << "\n";
    }
    return 0;
  }

  if (*cmd_factor) {
    const MonomialIdeal ideal = parse_generators(read_input(input_a)).to_ideal();
    try {
      const Factorization f = factor(ideal);
      std::cout << (as_json ? to_json(f) : print_factorization(f)) << "\n";
    } catch (const NotIntegrallyClosed& e) {
      throw NotIntegrallyClosed(std::string(e.what()) +
                                "; pipe the ideal through `staircase close` first");
    }
    return 0;
  }

  if (*cmd_expand) {
    const MonomialIdeal ideal = expand(parse_factorization(read_input(input_a)));
    std::cout << (as_json ? to_json(ideal) : print_ideal(ideal)) << "\n";
    return 0;
  }

  if (*cmd_mul) {
    const std::string a = read_input(input_a);
    const std::string b = read_input(input_b);
    if (a.find("E[") != std::string::npos || b.find("E[") != std::string::npos) {
      const Factorization product =
          multiply_factorizations(parse_factorization(a), parse_factorization(b));
      std::cout << (as_json ? to_json(product) : print_factorization(product)) << "\n";
    } else {
      const MonomialIdeal product =
          multiply(parse_generators(a).to_ideal(), parse_generators(b).to_ideal());
      std::cout << (as_json ? to_json(product) : print_ideal(product)) << "\n";
    }
    return 0;
  }

  if (*cmd_plot) {
    const ParsedGenerators parsed = parse_generators(read_input(input_a));
    const MonomialModule m = parsed.to_module();
    const BoundaryPath hull = lower_left_hull(m.generators());
    RenderOptions options;
    options.color = ansi_color_enabled();
    options.max_cells = plot_max_cells;
    options.viewport =
        plot_rect.empty() ? default_viewport(hull, m.generators()) : parse_rect(plot_rect);
    const std::string image = plot_format == "svg" ? render_svg(hull, m.generators(), options)
                                                   : render_ascii(hull, m.generators(), options);
    if (plot_out.empty()) {
      std::cout << image;
    } else {
      std::ofstream file(plot_out);
      if (!file) throw std::runtime_error("cannot write file '" + plot_out + "'");
      file << image;
    }
    return 0;
  }

  if (*mod_close) {
    const MonomialModule closed =
        module_closure(as_finite_module(load_module(module_input), "close"));
    std::cout << (as_json ? to_json(closed) : print_module(closed)) << "\n";
    return 0;
  }

  if (*mod_factor) {
    const FactorStream stream = as_stream(load_module(module_input));
    std::cout << (as_json ? to_json(stream) : describe_stream(stream)) << "\n";
    return 0;
  }

  if (*mod_approx) {
    const FactorStream stream = as_stream(load_module(module_input));
    const MonomialModule approx =
        partial_sum(stream, n_left >= 0 ? n_left : approx_n, n_right >= 0 ? n_right : approx_n);
    std::cout << (as_json ? to_json(approx) : print_module(approx)) << "\n";
    return 0;
  }

  if (*mod_truncate) {
    const MonomialIdeal ideal =
        quadrant_truncation(as_finite_module(load_module(module_input), "truncate"), truncate_a);
    std::cout << (as_json ? to_json(ideal) : print_ideal(ideal)) << "\n";
    return 0;
  }

  if (*mod_window) {
    const FactorStream stream = as_stream(load_module(module_input));
    const Window window(partial_sum(stream, approx_n, approx_n), parse_rect(rect_text));
    if (as_json) {
      std::cout << to_json(window) << "\n";
    } else {
      for (std::int64_t y = window.rect().y1; y >= window.rect().y0; --y) {
        for (std::int64_t x = window.rect().x0; x <= window.rect().x1; ++x) {
          std::cout << (window.at(x, y) ? '#' : '.');
        }
        std::cout << "\n";
      }
    }
    return 0;
  }

  if (*mod_converge) {
    const FactorStream stream = as_stream(load_module(module_input));
    const StabilizationReport report =
        check_convergence(stream, parse_rect(rect_text), converge_from, converge_to);
    if (as_json) {
      std::cout << to_json(report) << "\n";
    } else {
      std::cout << "range: [" << report.n_start << ", " << report.n_end << "]\n";
      if (report.stable_from) {
        std::cout << "stabilized at n0 = " << *report.stable_from << "\n";
      } else {
        std::cout << "did not stabilize within the range\n";
      }
      for (std::int64_t y = report.window.rect().y1; y >= report.window.rect().y0; --y) {
        for (std::int64_t x = report.window.rect().x0; x <= report.window.rect().x1; ++x) {
          std::cout << (report.window.at(x, y) ? '#' : '.');
        }
        std::cout << "\n";
      }
    }
    return 0;
  }

  if (*cmd_selftest) {
    const SelftestReport report = run_selftest(SelftestOptions{seed, cases, r_max});
    std::cout << "seed: " << report.seed << "\n";
    std::cout << "rmax: " << r_max << "\n";
    for (const SuiteTiming& t : report.timings) {
      std::cout << "suite " << t.name << ": " << report.passed << " cases, " << t.millis
                << " ms\n";
    }
    std::cout << "OK, " << report.passed << "/" << report.requested << "\n";
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
