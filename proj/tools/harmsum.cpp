// harmsum: emit and verify closed forms for weighted sums of generalized
// harmonic numbers.
//
//   harmsum identity --family f --p 2 --m 1 --offset-a 2 --format latex
//   harmsum table --format json
//   harmsum verify --family g --p 3 --m 2 --n-max 25
//   harmsum check --sbp --n-max 30
//   harmsum bernoulli --p 12
//   harmsum faulhaber --p 5

#include "harmsum/harmsum.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace harmsum;

struct CliConfig {
    std::string family;  // "f", "g" or empty for both
    std::optional<std::int64_t> p;
    std::optional<std::int64_t> m;
    std::optional<std::int64_t> offset_a;
    std::optional<std::int64_t> offset_b;
    std::optional<std::int64_t> w;
    std::string format = "text";
    std::optional<std::int64_t> n_max;
    std::string output;
    std::string variant = "shifted";
    bool sbp = false;
    std::vector<std::string> corollaries;
    unsigned jobs = 1;
    bool inject_fault = false;
    bool all_cells = false;
};

class Output {
  public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot open output file " + path);
        }
    }

    std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

  private:
    std::ofstream file_;
};

Format format_of(const CliConfig& cfg) { return *parse_format(cfg.format); }

LinearArg offset_of(const CliConfig& cfg) { return {cfg.offset_a.value_or(0), cfg.offset_b.value_or(0)}; }

std::string describe(const CliConfig& cfg) {
    std::ostringstream os;
    os << "family=" << (cfg.family.empty() ? "f" : cfg.family) << " p=" << cfg.p.value_or(0) << " m=" << cfg.m.value_or(1)
       << " offset=" << cfg.offset_a.value_or(0) << "n+" << cfg.offset_b.value_or(0);
    return os.str();
}

ClosedForm build(const std::string& family, std::int64_t p, std::int64_t m, const LinearArg& s, OffsetVariant variant) {
    const OffsetSpec offset(s);
    if (family == "g") return offset_sum_g(p, m, offset, variant);
    return offset_sum_f(p, m, offset, variant);
}

int cmd_identity(const CliConfig& cfg) {
    const std::string family = cfg.family.empty() ? "f" : cfg.family;
    const auto variant = cfg.variant == "harmonic" ? OffsetVariant::harmonic : OffsetVariant::shifted;
    const std::int64_t p = cfg.p.value_or(0);
    const std::int64_t m = cfg.m.value_or(1);
    const LinearArg s = offset_of(cfg);
    ClosedForm cf;
    if (s.a == 0 && s.b == 0 && variant == OffsetVariant::shifted)
        cf = family == "g" ? sum_g(p, m) : sum_f(p, m);
    else
        cf = build(family, p, m, s, variant);

    Output out(cfg.output);
    const Format fmt = format_of(cfg);
    if (fmt == Format::json) {
        nlohmann::json j = {{"family", family},
                            {"p", p},
                            {"m", m},
                            {"s", {{"a", s.a}, {"b", s.b}}},
                            {"variant", cfg.variant},
                            {"closed_form", to_json(cf)}};
        out.stream() << j.dump() << "\n";
        return 0;
    }
    const EntryKind kind = family == "g" ? (s.a == 0 && s.b == 0 ? EntryKind::g : EntryKind::offset_g)
                                         : (s.a == 0 && s.b == 0 ? EntryKind::f : EntryKind::offset_f);
    std::string lhs = render_lhs({kind, p, m, s}, fmt);
    if (variant == OffsetVariant::harmonic) {
        const std::string sub = detail::arg_string(s) + "," + (family == "g" ? "n-k" : "k");
        const std::string order = m == 1 ? "" : (fmt == Format::latex ? "^{(" : "^(") + std::to_string(m) + (fmt == Format::latex ? ")}" : ")");
        const std::string weight = p == 0 ? "" : (p == 1 ? "k " : (fmt == Format::latex ? "k^{" + std::to_string(p) + "} " : "k^" + std::to_string(p) + " "));
        lhs = std::string(fmt == Format::latex ? "\\sum_{k=0}^n " : "sum_{k=0}^n ") + weight + "H_{" + sub + "}" + order;
    }
    out.stream() << lhs << " = " << render(cf, fmt) << "\n";
    return 0;
}

int cmd_table(const CliConfig& cfg) {
    Output out(cfg.output);
    out.stream() << render_catalogue(format_of(cfg));
    return 0;
}

int cmd_verify(const CliConfig& cfg) {
    std::vector<oracle::Family> families;
    if (cfg.family.empty() || cfg.family == "f") families.push_back(oracle::Family::f);
    if (cfg.family.empty() || cfg.family == "g") families.push_back(oracle::Family::g);

    oracle::GridSpec grid;
    if (cfg.p) grid.p_range = {*cfg.p, *cfg.p};
    if (cfg.m) grid.m_range = {*cfg.m, *cfg.m};
    // Any parameter narrows to a sub-grid; its offset defaults to s = 0.
    const bool sub_grid = !cfg.family.empty() || cfg.p || cfg.m || cfg.offset_a || cfg.offset_b;
    grid.offsets = sub_grid ? std::vector<LinearArg>{offset_of(cfg)} : oracle::GridSpec::small_offsets();
    grid.n_range = {0, cfg.n_max.value_or(40)};

    const bool fault = cfg.inject_fault;
    auto provider = [fault](oracle::Family f, std::int64_t p, std::int64_t m, const LinearArg& s) {
        ClosedForm cf = build(f == oracle::Family::g ? "g" : "f", p, m, s, OffsetVariant::shifted);
        if (fault) cf.add_constant(RationalFunction(BigRational(1)));
        return cf;
    };

    oracle::VerificationReport report;
    for (auto f : families) {
        grid.family = f;
        report.append(oracle::verify_grid(grid, provider, cfg.jobs));
    }

    Output out(cfg.output);
    if (format_of(cfg) == Format::json) {
        out.stream() << oracle::to_json(report, !cfg.all_cells).dump(1) << "\n";
    } else {
        for (const auto* c : report.failures()) {
            out.stream() << "FAIL " << oracle::to_string(c->family) << " p=" << c->p << " m=" << c->m
                         << " s=" << detail::arg_string(c->s) << " n=" << c->n << " lhs=" << to_string(c->lhs)
                         << " rhs=" << (c->error.empty() ? to_string(c->rhs) : "error: " + c->error) << "\n";
        }
        out.stream() << "verify: " << report.total << " cells, " << report.passed << " passed, " << report.failed
                     << " failed\n";
    }
    return report.all_pass() ? 0 : 1;
}

int cmd_check(const CliConfig& cfg) {
    std::vector<IdentityReport> reports;
    const bool run_all = !cfg.sbp && cfg.corollaries.empty();
    if (cfg.sbp || run_all) {
        const std::int64_t n_max = cfg.n_max.value_or(30);
        const std::int64_t m_lo = cfg.m.value_or(-2), m_hi = cfg.m.value_or(3);
        const std::int64_t w_lo = cfg.w.value_or(-3), w_hi = cfg.w.value_or(3);
        for (std::int64_t m = m_lo; m <= m_hi; ++m)
            for (std::int64_t w = w_lo; w <= w_hi; ++w)
                for (std::int64_t n = 0; n <= n_max; ++n) reports.push_back(sbp_check(m, w, n));
    }
    std::vector<std::string> names = cfg.corollaries;
    if (run_all) names = {"inv_k", "inv_k_plus_1"};
    for (const auto& name : names) {
        const Corollary which = *parse_corollary(name);
        const std::int64_t n_max = cfg.n_max.value_or(100);
        for (std::int64_t n = 1; n <= n_max; ++n) reports.push_back(corollary_check(which, n));
    }

    std::size_t failed = 0;
    nlohmann::json failures = nlohmann::json::array();
    Output out(cfg.output);
    const bool json = format_of(cfg) == Format::json;
    for (const auto& r : reports) {
        if (r.all_pass()) continue;
        ++failed;
        const auto& c = r.checks.front();
        if (json) {
            failures.push_back({{"family", to_string(r.family)},
                                {"m", r.params.m.value_or(0)},
                                {"w", r.params.w.value_or(0)},
                                {"variant", r.params.variant},
                                {"n", c.n},
                                {"lhs", to_string(c.lhs)},
                                {"rhs", to_string(c.rhs)}});
        } else {
            out.stream() << "FAIL " << to_string(r.family) << " " << r.params.variant << " m=" << r.params.m.value_or(0)
                         << " w=" << r.params.w.value_or(0) << " n=" << c.n << " lhs=" << to_string(c.lhs)
                         << " rhs=" << to_string(c.rhs) << "\n";
        }
    }
    if (json) {
        nlohmann::json j = {{"summary", {{"total", reports.size()}, {"passed", reports.size() - failed}, {"failed", failed}}},
                            {"failures", failures}};
        out.stream() << j.dump(1) << "\n";
    } else {
        out.stream() << "check: " << reports.size() << " identities, " << reports.size() - failed << " passed, "
                     << failed << " failed\n";
    }
    return failed == 0 ? 0 : 1;
}

int cmd_bernoulli(const CliConfig& cfg) {
    const std::int64_t k_max = cfg.p.value_or(10);
    Output out(cfg.output);
    const Format fmt = format_of(cfg);
    if (fmt == Format::json) {
        nlohmann::json arr = nlohmann::json::array();
        for (std::int64_t k = 0; k <= k_max; ++k) arr.push_back(to_string(bernoulli_plus(k)));
        out.stream() << arr.dump() << "\n";
        return 0;
    }
    for (std::int64_t k = 0; k <= k_max; ++k)
        out.stream() << (fmt == Format::latex ? "B_{" + std::to_string(k) + "}^+" : "B+_" + std::to_string(k)) << " = "
                     << render(bernoulli_plus(k), fmt) << "\n";
    return 0;
}

int cmd_faulhaber(const CliConfig& cfg) {
    const std::int64_t p = cfg.p.value_or(0);
    const Polynomial poly = faulhaber_poly(p);
    Output out(cfg.output);
    const Format fmt = format_of(cfg);
    if (fmt == Format::json) {
        nlohmann::json j = {{"p", p}, {"closed_form", to_json(ClosedForm(RationalFunction(poly)))}};
        out.stream() << j.dump() << "\n";
        return 0;
    }
    out.stream() << render_lhs({EntryKind::power_sum, p, -p, {0, 0}}, fmt) << " = " << render(poly, fmt) << "\n";
    return 0;
}

void add_format(CLI::App* cmd, CliConfig& cfg) {
    cmd->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "latex", "json"}));
    cmd->add_option("--output", cfg.output, "Write to this file instead of standard output");
}

void add_params(CLI::App* cmd, CliConfig& cfg) {
    cmd->add_option("--family", cfg.family, "f: sum k^p H_{s+k}, g: sum k^p H_{s+n-k}")
        ->check(CLI::IsMember({"f", "g"}));
    cmd->add_option("--p", cfg.p, "Power of k (>= 0)")->check(CLI::Range(std::int64_t{0}, std::int64_t{1000}));
    cmd->add_option("--m", cfg.m, "Harmonic order (>= -10)")->check(CLI::Range(std::int64_t{-10}, std::int64_t{1000}));
    cmd->add_option("--offset-a", cfg.offset_a, "Offset slope a in s = a n + b")
        ->check(CLI::Range(std::int64_t{0}, std::int64_t{10}));
    cmd->add_option("--offset-b", cfg.offset_b, "Offset constant b in s = a n + b")
        ->check(CLI::Range(std::int64_t{0}, std::int64_t{10}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Closed forms for finite sums of generalized harmonic numbers"};
    app.require_subcommand(1);
    CliConfig cfg;

    auto* identity = app.add_subcommand("identity", "Print the closed form of one sum");
    add_params(identity, cfg);
    add_format(identity, cfg);
    identity->add_option("--variant", cfg.variant, "shifted: H_{s+k}; harmonic: offset harmonic numbers H_{s,k}")
        ->check(CLI::IsMember({"shifted", "harmonic"}));

    auto* table = app.add_subcommand("table", "Print the standard example catalogue");
    add_format(table, cfg);

    auto* verify = app.add_subcommand("verify", "Check closed forms against brute-force double sums");
    add_params(verify, cfg);
    add_format(verify, cfg);
    verify->add_option("--n-max", cfg.n_max, "Largest n checked (default 40)")
        ->check(CLI::Range(std::int64_t{0}, std::int64_t{10000}));
    verify->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
    verify->add_flag("--all-cells", cfg.all_cells, "JSON: list every cell, not only failures");
    verify->add_flag("--inject-fault", cfg.inject_fault, "Corrupt every closed form (negative control)")->group("");

    auto* check = app.add_subcommand("check", "Check summation by parts and the 1/k, 1/(k+1) corollaries");
    add_format(check, cfg);
    check->add_flag("--sbp", cfg.sbp, "Summation-by-parts identity over m in [-2,3], w in [-3,3]");
    check->add_option("--corollary", cfg.corollaries, "inv_k or inv_k_plus_1")
        ->check(CLI::IsMember({"inv_k", "inv_k_plus_1"}));
    check->add_option("--m", cfg.m, "Only this order")->check(CLI::Range(std::int64_t{-10}, std::int64_t{1000}));
    check->add_option("--w", cfg.w, "Only this exponent")->check(CLI::Range(std::int64_t{-100}, std::int64_t{100}));
    check->add_option("--n-max", cfg.n_max, "Largest n checked (default 30 for sbp, 100 for corollaries)")
        ->check(CLI::Range(std::int64_t{0}, std::int64_t{10000}));

    auto* bernoulli = app.add_subcommand("bernoulli", "Print B+_0 .. B+_p");
    bernoulli->add_option("--p", cfg.p, "Largest index (default 10)")->check(CLI::Range(std::int64_t{0}, std::int64_t{1000}));
    add_format(bernoulli, cfg);

    auto* faulhaber = app.add_subcommand("faulhaber", "Print the power-sum polynomial for exponent p");
    faulhaber->add_option("--p", cfg.p, "Exponent")->check(CLI::Range(std::int64_t{0}, std::int64_t{1000}));
    add_format(faulhaber, cfg);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*identity) return cmd_identity(cfg);
        if (*table) return cmd_table(cfg);
        if (*verify) return cmd_verify(cfg);
        if (*check) return cmd_check(cfg);
        if (*bernoulli) return cmd_bernoulli(cfg);
        if (*faulhaber) return cmd_faulhaber(cfg);
    } catch (const DomainError& e) {
        std::cerr << "domain error (" << describe(cfg) << "): " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
