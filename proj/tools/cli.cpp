#include "cli.hpp"

#include "hyperoct/classify.hpp"
#include "hyperoct/fock.hpp"
#include "hyperoct/gram.hpp"
#include "hyperoct/group_algebra.hpp"
#include "hyperoct/hirai.hpp"
#include "hyperoct/moments.hpp"
#include "hyperoct/pairpart.hpp"
#include "hyperoct/schur_weyl.hpp"
#include "hyperoct/type_d.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <sstream>

namespace hyperoct::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Result {
    std::string name;
    std::string status;
    json evidence;
};

struct Report {
    std::string command;
    json parameters = json::object();
    std::vector<Result> results;
    std::vector<std::string> csv_header;
    std::vector<std::vector<std::string>> csv_rows;

    void check(std::string name, bool ok, json evidence = json::object()) {
        results.push_back({std::move(name), ok ? "pass" : "fail", std::move(evidence)});
    }
    void skip(std::string name, json evidence = json::object()) {
        results.push_back({std::move(name), "skipped", std::move(evidence)});
    }
    bool failed() const {
        return std::any_of(results.begin(), results.end(), [](const Result& r) { return r.status == "fail"; });
    }
};

struct Options {
    bool csv = false;
    std::string out;
    unsigned long long seed = 1;
    double budget = kDefaultBudget;

    std::string word, qp, qm, q, blocks, eps_word, routes = "all", checks = "all";
    int n = -1, M = 1, N = 1, eps = 1, bound = 12, d = 2, level = 3, word_length = 5, max = 10;
    int specializations = 0;
    bool allow_large = false, perfect = false, degenerate = false, atoms = false;
};

// ---- JSON helpers

json rat(const Rational& r) { return to_string(r); }

json poly(const BivarPoly& p) {
    json a = json::array();
    for (const auto& [e, c] : p.terms())
        a.push_back({{"e_qp", e.first}, {"e_qm", e.second}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
    return a;
}

json upoly(const UniPoly& p) {
    json a = json::array();
    for (int k = 0; k <= static_cast<int>(p.degree()); ++k) a.push_back(to_string(p.coefficient(k)));
    return a;
}

json parts(const Partition& p) { return p.parts(); }

json ctype(const CycleType& t) { return {{"rho_plus", parts(t.rho_plus)}, {"rho_minus", parts(t.rho_minus)}}; }

json blocks_json(const PointPartition& p) {
    json a = json::array();
    for (const auto& [x, y] : p.blocks()) a.push_back(x == y ? json::array({x}) : json::array({x, y}));
    return a;
}

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string o = "\"";
    for (char c : s) {
        if (c == '"') o += '"';
        o += c;
    }
    return o + "\"";
}

void poly_rows(Report& rep, const std::vector<std::string>& prefix, const BivarPoly& p) {
    for (const auto& [e, c] : p.terms()) {
        auto row = prefix;
        row.push_back(std::to_string(e.first));
        row.push_back(std::to_string(e.second));
        row.push_back(c.get_num().get_str());
        row.push_back(c.get_den().get_str());
        rep.csv_rows.push_back(std::move(row));
    }
}

// ---- parsing and budget helpers

Rational need_rational(const std::string& s, const char* flag) {
    if (s.empty()) throw UsageError(std::string("missing ") + flag);
    try {
        return parse_rational(s);
    } catch (const std::invalid_argument&) {
        throw UsageError(std::string("bad rational for ") + flag + ": " + s);
    }
}

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    std::string tok;
    std::stringstream ss(s);
    while (std::getline(ss, tok, ',')) {
        tok.erase(0, tok.find_first_not_of(" \t"));
        tok.erase(tok.find_last_not_of(" \t") + 1);
        if (tok.empty()) continue;
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size()) throw UsageError("bad integer list: " + s);
        out.push_back(v);
    }
    return out;
}

SignedPermutation need_word(const std::string& s) {
    if (s.empty()) throw UsageError("missing --word");
    try {
        return SignedPermutation(parse_ints(s));
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("bad signed permutation: ") + e.what());
    }
}

double group_size(int n) {
    double r = 1;
    for (int k = 1; k <= n; ++k) r *= 2.0 * k;
    return r;
}

double partition_count(int n) {
    std::vector<double> p(static_cast<std::size_t>(std::max(n, 0)) + 1, 0);
    p[0] = 1;
    for (int k = 1; k <= n; ++k)
        for (int m = k; m <= n; ++m) p[m] += p[m - k];
    return p[static_cast<std::size_t>(std::max(n, 0))];
}

double sym_partition_count(int n) {
    double a = 1, b = 1;
    for (int k = 2; k <= n; ++k) {
        double c = b + 2.0 * (k - 1) * a;
        a = b;
        b = c;
    }
    return n <= 0 ? 1 : b;
}

void require_budget(const Options& o, double estimate, const std::string& what) {
    if (estimate > o.budget) {
        std::ostringstream m;
        m << what << " needs about " << estimate << " work units, budget is " << o.budget;
        throw UsageError(m.str());
    }
}

void require_rank(int n, int lo, int hi, const char* flag = "--n") {
    if (n < lo || n > hi) throw UsageError(std::string(flag) + " must be in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

// ---- commands

void cmd_phi(const Options& o, Report& rep) {
    auto s = need_word(o.word);
    rep.parameters = {{"word", s.word()}};
    auto t = cycle_type(s);
    auto l = reflection_lengths(t);
    std::vector<std::string> cycles;
    for (const auto& c : s.cycles()) {
        std::string str = "(";
        for (std::size_t i = 0; i < c.size(); ++i) str += (i ? " " : "") + std::to_string(c[i]);
        cycles.push_back(str + ")");
    }
    rep.check("cycle_type", true,
              {{"reduced", ctype(t)}, {"padded", ctype(t.to_padded(s.rank()))}, {"cycles", cycles}});
    rep.check("reflection_lengths", true, {{"ell_plus", l.ell_plus}, {"ell_minus", l.ell_minus}});
    json ev = {{"phi", poly(phi(t))}};
    if (!o.qp.empty() || !o.qm.empty()) {
        Rational a = need_rational(o.qp, "--qp"), b = need_rational(o.qm, "--qm");
        rep.parameters["qp"] = rat(a);
        rep.parameters["qm"] = rat(b);
        ev["value"] = rat(phi(t, a, b));
    }
    rep.check("phi", true, ev);
}

json witness_json(const Witness& w) {
    return {{"lambda_plus", parts(w.lam.first)},
            {"lambda_minus", parts(w.lam.second)},
            {"size", w.size()},
            {"coefficient", rat(w.value)}};
}

void cmd_classify(const Options& o, Report& rep) {
    Rational a = need_rational(o.qp, "--qp"), b = need_rational(o.qm, "--qm");
    require_rank(o.bound, 0, 40, "--bound");
    require_budget(o, (o.bound + 1) * partition_count(o.bound) * partition_count(o.bound), "witness scan");
    rep.parameters = {{"qp", rat(a)}, {"qm", rat(b)}, {"bound", o.bound}};
    auto r = classify(a, b, o.bound);
    json ev;
    switch (r.verdict) {
    case ClassificationResult::Verdict::Extreme:
        ev = {{"verdict", "extreme"}, {"M", r.M}, {"N", r.N}, {"eps", r.eps}};
        break;
    case ClassificationResult::Verdict::Degenerate:
        ev = {{"verdict", "degenerate"}, {"q_minus", rat(r.q_minus)}};
        break;
    case ClassificationResult::Verdict::NotPD:
        ev = {{"verdict", "not_pd"}};
        break;
    }
    ev["positive_definite"] = r.positive_definite();
    rep.check("verdict", true, ev);
    if (r.verdict == ClassificationResult::Verdict::NotPD) {
        if (r.witness) rep.check("witness", true, witness_json(*r.witness));
        else rep.check("witness", false, {{"reason", "no negative coefficient up to the bound"}});
    }
}

void cmd_classify_a(const Options& o, Report& rep) {
    Rational q = need_rational(o.q, "--q");
    require_rank(o.bound, 0, 60, "--bound");
    rep.parameters = {{"q", rat(q)}, {"bound", o.bound}};
    auto r = classify_A(q, o.bound);
    rep.check("verdict", true, {{"verdict", r.positive_definite ? "pd" : "not_pd"}, {"positive_definite", r.positive_definite}});
    if (!r.positive_definite) {
        if (r.witness) rep.check("witness", true, {{"lambda", parts(*r.witness)}, {"coefficient", rat(r.witness_value)}});
        else rep.check("witness", false, {{"reason", "no negative coefficient up to the bound"}});
    }
}

void cmd_expand(const Options& o, Report& rep) {
    const int n = o.n < 0 ? 3 : o.n;
    require_rank(n, 1, 8);
    require_budget(o, group_size(n), "expansion check");
    rep.parameters = {{"n", n}};
    rep.csv_header = {"class", "side", "e_qp", "e_qm", "num", "den"};
    for (const auto& row : verify_rozklad(n).rows) {
        const std::string name = row.rho.to_string();
        rep.check("class " + name, row.ok, {{"class", ctype(row.rho)}, {"expanded", poly(row.expanded)}, {"phi", poly(row.phi)}});
        poly_rows(rep, {name, "expanded"}, row.expanded);
        poly_rows(rep, {name, "phi"}, row.phi);
    }
}

void cmd_chartable(const Options& o, Report& rep) {
    const int n = o.n < 0 ? 2 : o.n;
    require_rank(n, 1, 8);
    require_budget(o, group_size(n), "character table");
    rep.parameters = {{"n", n}};
    auto classes = padded_classes(n);
    auto irreps = irreps_B(n);
    std::vector<std::vector<long long>> table;
    json cls = json::array(), irr = json::array(), values = json::array();
    for (const auto& c : classes) cls.push_back(ctype(c));
    rep.csv_header = {"irrep", "class", "value"};
    for (const auto& lam : irreps) {
        irr.push_back({{"lambda_plus", parts(lam.first)}, {"lambda_minus", parts(lam.second)}});
        std::vector<long long> row;
        for (const auto& c : classes) {
            row.push_back(char_B(lam, c));
            rep.csv_rows.push_back({"(" + lam.first.to_string() + "," + lam.second.to_string() + ")", c.to_string(),
                                    std::to_string(row.back())});
        }
        values.push_back(row);
        table.push_back(std::move(row));
    }
    const Integer order = group_order(n);
    bool rows_ok = true, cols_ok = true;
    for (std::size_t a = 0; a < irreps.size(); ++a)
        for (std::size_t b = 0; b < irreps.size(); ++b) {
            Integer s = 0;
            for (std::size_t k = 0; k < classes.size(); ++k)
                s += class_size(classes[k], n) * static_cast<long>(table[a][k] * table[b][k]);
            rows_ok = rows_ok && s == (a == b ? order : Integer(0));
        }
    for (std::size_t a = 0; a < classes.size(); ++a)
        for (std::size_t b = 0; b < classes.size(); ++b) {
            Integer s = 0;
            for (std::size_t k = 0; k < irreps.size(); ++k) s += static_cast<long>(table[k][a] * table[k][b]);
            cols_ok = cols_ok && s * class_size(classes[a], n) == (a == b ? order : Integer(0));
        }
    rep.check("table", true, {{"classes", cls}, {"irreps", irr}, {"values", values}});
    rep.check("row_orthogonality", rows_ok);
    rep.check("column_orthogonality", cols_ok);
}

void cmd_gram(const Options& o, Report& rep) {
    if (o.n < 0) throw UsageError("missing --n");
    require_rank(o.n, 1, 8);
    if (o.n >= 4 && !o.allow_large) throw UsageError("--n 4 and above needs --allow-large");
    Rational a = need_rational(o.qp, "--qp"), b = need_rational(o.qm, "--qm");
    require_budget(o, group_size(o.n) * group_size(o.n), "Gram matrix");
    rep.parameters = {{"n", o.n}, {"qp", rat(a)}, {"qm", rat(b)}};
    const bool psd = gram_psd(o.n, a, b);
    rep.check("psd", psd, {{"psd", psd}, {"size", static_cast<long>(group_size(o.n))}});
}

void cmd_factorize(const Options& o, Report& rep) {
    auto s = need_word(o.word);
    rep.parameters = {{"word", s.word()}};
    auto f = minimal_nonmixing_factorization(s);
    auto l = reflection_lengths(s);
    int shorts = 0;
    json refl = json::array();
    for (const auto& r : f) {
        shorts += r.kind == Reflection::Kind::Short;
        refl.push_back(r.to_string());
    }
    const int longs = static_cast<int>(f.size()) - shorts;
    rep.check("product", product(f, s.rank()) == s, {{"reflections", refl}});
    rep.check("non_mixing", is_nonmixing(f, s));
    rep.check("counts", longs == l.ell_plus && shorts == l.ell_minus,
              {{"long", longs}, {"short", shorts}, {"expected_long", l.ell_plus}, {"expected_short", l.ell_minus}});
}

void cmd_schur_weyl(const Options& o, Report& rep) {
    RepConfig cfg{o.M, o.N, o.eps, o.n < 0 ? 2 : o.n};
    try {
        cfg.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    require_budget(o, group_size(cfg.n) * static_cast<double>(cfg.dimension()), "representation check");
    rep.parameters = {{"M", cfg.M}, {"N", cfg.N}, {"eps", cfg.eps}, {"n", cfg.n}, {"seed", o.seed}};
    json ev = {{"dimension", cfg.dimension()}, {"q_plus", rat(cfg.q_plus())}, {"q_minus", rat(cfg.q_minus())}};
    rep.check("homomorphism", verify_homomorphism(cfg, o.seed), ev);
    rep.check("character", verify_character(cfg), ev);
}

void cmd_hirai(const Options& o, Report& rep) {
    const int n = o.n < 0 ? 3 : o.n;
    require_rank(n, 1, 8);
    require_budget(o, group_size(n), "Hirai comparison");
    if (o.degenerate) {
        Rational b = need_rational(o.qm, "--qm");
        if (abs(b) > 1) throw UsageError("--qm must satisfy |q-| <= 1");
        rep.parameters = {{"degenerate", true}, {"qm", rat(b)}, {"n", n}};
        for (int k = 1; k <= n; ++k) rep.check("rank " + std::to_string(k), hirai_matches_phi_degenerate(b, k));
        return;
    }
    if (o.M < 0 || o.N < 0 || o.M + o.N < 1) throw UsageError("need M, N >= 0 and M+N >= 1");
    if (o.eps != 1 && o.eps != -1) throw UsageError("--eps must be 1 or -1");
    rep.parameters = {{"M", o.M}, {"N", o.N}, {"eps", o.eps}, {"n", n}};
    for (int k = 1; k <= n; ++k) rep.check("rank " + std::to_string(k), hirai_matches_phi(o.M, o.N, o.eps, k));
}

SymPairPartition parse_blocks(const std::string& s, int n) {
    json j;
    try {
        j = json::parse(s);
    } catch (const json::exception& e) {
        throw UsageError(std::string("--blocks is not JSON: ") + e.what());
    }
    if (!j.is_array()) throw UsageError("--blocks must be an array of arrays");
    std::vector<Block> blocks;
    int top = 0;
    for (const auto& b : j) {
        if (!b.is_array() || b.empty() || b.size() > 2) throw UsageError("each block has one or two points");
        for (const auto& x : b) {
            if (!x.is_number_integer()) throw UsageError("block points must be integers");
            top = std::max(top, std::abs(x.get<int>()));
        }
        int x = b[0].get<int>(), y = b.size() == 2 ? b[1].get<int>() : x;
        blocks.emplace_back(std::min(x, y), std::max(x, y));
    }
    try {
        return SymPairPartition(n < 0 ? top : n, std::move(blocks));
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("bad partition: ") + e.what());
    }
}

void cmd_pairpart(const Options& o, Report& rep) {
    if (!o.blocks.empty()) {
        auto p = parse_blocks(o.blocks, o.n);
        rep.parameters = {{"n", p.n()}, {"blocks", blocks_json(p)}};
        auto h = hat(p);
        rep.check("hat", satisfies_hat_conditions(p, h), {{"blocks", blocks_json(h)}});
        auto d = decompose(p);
        json cycles = json::array(), semis = json::array(), order = json::array();
        for (const auto& c : d.cycles) cycles.push_back({{"sign", c.sign > 0 ? "+" : "-"}, {"length", c.length}, {"support", c.support}});
        for (const auto& s : d.semi_cycles)
            semis.push_back({{"length", s.length},
                             {"plus", s.plus_part},
                             {"minus", s.minus_part},
                             {"l_plus", s.l_plus},
                             {"r_plus", s.r_plus},
                             {"l_minus", s.l_minus},
                             {"r_minus", s.r_minus}});
        for (const auto& [r, l] : semicycle_tensor_order(d)) order.push_back({{"key", r}, {"label", l}});
        rep.check("decomposition", d.regular,
                  {{"cycles", cycles},
                   {"semi_cycles", semis},
                   {"tensor_order", order},
                   {"stats", {{"c", d.stats.c}, {"c_minus", d.stats.c_minus}, {"l_c", d.stats.l_c}, {"l_sc", d.stats.l_sc}}},
                   {"weight", poly(weight(d.stats))}});
        return;
    }
    if (o.n < 0) throw UsageError("need --n or --blocks");
    require_rank(o.n, 0, 20);
    require_budget(o, sym_partition_count(o.n) * std::max(o.n, 1), "partition enumeration");
    std::optional<std::string> eps;
    if (!o.eps_word.empty()) {
        if (static_cast<int>(o.eps_word.size()) != o.n || o.eps_word.find_first_not_of("1*") != std::string::npos)
            throw UsageError("--eps must be a word in {1,*} of length n");
        eps = o.eps_word;
    }
    rep.parameters = {{"n", o.n}, {"eps", eps ? json(*eps) : json(nullptr)}, {"perfect", o.perfect}};
    auto all = enumerate(o.n, eps, o.perfect);
    json ev = {{"count", all.size()}};
    bool ok = true;
    if (!eps) {
        Integer expect;
        if (o.perfect) {
            expect = o.n % 2 ? Integer(0) : (Integer(1) << (o.n / 2)) * double_factorial(o.n - 1);
        } else {
            Integer a = 1, b = 1;
            for (int k = 2; k <= o.n; ++k) {
                Integer c = b + 2 * (k - 1) * a;
                a = b;
                b = c;
            }
            expect = b;
        }
        ev["expected"] = expect.get_str();
        ok = expect == static_cast<unsigned long>(all.size());
    }
    rep.check("count", ok, ev);
    bool hat_ok = true, regular = true;
    for (const auto& p : all) {
        hat_ok = hat_ok && satisfies_hat_conditions(p, hat(p));
        if (eps) regular = regular && decompose(p).regular;
    }
    rep.check("hat_conditions", hat_ok);
    if (eps) rep.check("regular_decomposition", regular);
}

// Deterministic small rationals for generic-vector checks.
class VectorSource {
public:
    VectorSource(unsigned long long seed, int d) : rng_(seed), d_(d) {}
    Vec next() {
        std::uniform_int_distribution<long> num(-5, 5), den(1, 6);
        Vec v;
        do {
            v.clear();
            for (int i = 0; i < d_; ++i) v.push_back(frac(num(rng_), den(rng_)));
        } while (std::all_of(v.begin(), v.end(), [](const Rational& r) { return r == 0; }));
        return v;
    }

private:
    std::mt19937_64 rng_;
    int d_;
};

std::vector<std::vector<int>> all_tuples(int d, int len) {
    std::vector<std::vector<int>> out{{}};
    for (int k = 0; k < len; ++k) {
        std::vector<std::vector<int>> next;
        for (const auto& t : out)
            for (int j = 0; j < d; ++j) {
                auto u = t;
                u.push_back(j);
                next.push_back(std::move(u));
            }
        out = std::move(next);
    }
    return out;
}

void cmd_fock(const Options& o, Report& rep) {
    require_rank(o.d, 1, 4, "--d");
    require_rank(o.level, 0, 6, "--level");
    require_rank(o.word_length, 0, 8, "--word-length");
    std::set<std::string> checks;
    const std::set<std::string> known{"prop1", "annihilator", "adjoint", "commutation", "words", "exclusion"};
    if (o.checks == "all") checks = known;
    else
        for (const auto& c : CLI::detail::split(o.checks, ',')) {
            if (!known.count(c)) throw UsageError("unknown check: " + c);
            checks.insert(c);
        }
    const double level_work = std::pow(static_cast<double>(o.d), 2.0 * o.level) * group_size(o.level);
    const double word_work = std::pow(2.0, o.word_length) * sym_partition_count(o.word_length) *
                             std::pow(static_cast<double>(o.d), 2.0 * o.word_length);
    require_budget(o, (checks.count("prop1") ? level_work : 0) + (checks.count("words") ? word_work : 0), "Fock checks");
    rep.parameters = {{"d", o.d}, {"level", o.level}, {"word_length", o.word_length}, {"checks", std::vector<std::string>(checks.begin(), checks.end())}, {"seed", o.seed}};

    const auto q = symbolic();
    using SV = FockVector<BivarPoly>;
    VectorSource src(o.seed, o.d);

    if (checks.count("prop1")) {
        long cases = 0;
        bool ok = true;
        for (int n = 1; n <= o.level && ok; ++n) {
            auto inner = symmetrizer(n, q, n - 1), full = symmetrizer(n, q);
            auto r = r_operator(n, q);
            for (const auto& t : all_tuples(o.d, 2 * n)) {
                auto b = SV::basis(o.d, t);
                auto p = apply_combination(full, b);
                ok = ok && apply_combination(inner, apply_combination(r, b)) == p && apply_combination(r, apply_combination(inner, b)) == p;
                ++cases;
            }
        }
        rep.check("prop1", ok, {{"basis_vectors", cases}});
    }
    if (checks.count("annihilator")) {
        long cases = 0;
        bool ok = true;
        auto x = src.next(), y = src.next();
        for (int n = 0; n <= o.level; ++n)
            for (const auto& t : all_tuples(o.d, 2 * n)) {
                auto b = SV::basis(o.d, t);
                ok = ok && annihilate(x, y, b, q) == annihilate_direct(x, y, b, q);
                ++cases;
            }
        rep.check("annihilator", ok, {{"basis_vectors", cases}});
    }
    if (checks.count("adjoint")) {
        long cases = 0;
        bool ok = true;
        for (int n = 0; n < o.level; ++n) {
            std::vector<Vec> us, vs;
            for (int k = 0; k < 2 * n; ++k) us.push_back(src.next());
            for (int k = 0; k < 2 * n + 2; ++k) vs.push_back(src.next());
            auto u = SV::tensor(o.d, us), v = SV::tensor(o.d, vs);
            auto x = src.next(), y = src.next();
            ok = ok && deformed_inner(create(x, y, u), v, q) == deformed_inner(u, annihilate(x, y, v, q), q);
            ++cases;
        }
        rep.check("adjoint", ok, {{"pairs", cases}});
    }
    if (checks.count("commutation")) {
        long cases = 0;
        bool ok = true;
        auto x = src.next(), y = src.next(), xi = src.next(), eta = src.next();
        for (int n = 0; n <= o.level; ++n)
            for (const auto& t : all_tuples(o.d, 2 * n)) {
                auto b = SV::basis(o.d, t);
                ok = ok && annihilate(x, y, create(xi, eta, b), q) == commutation_rhs(x, y, xi, eta, b, q);
                ++cases;
            }
        rep.check("commutation", ok, {{"basis_vectors", cases}});
    }
    if (checks.count("words")) {
        long cases = 0;
        bool ok = true;
        std::string first_bad;
        for (int len = 1; len <= o.word_length; ++len)
            for (unsigned mask = 0; mask < (1u << len); ++mask) {
                std::string w;
                for (int k = 0; k < len; ++k) w += (mask >> k) & 1u ? '*' : '1';
                std::vector<std::pair<Vec, Vec>> pairs;
                for (int k = 0; k < len; ++k) {
                    auto a = src.next();
                    pairs.emplace_back(a, src.next());
                }
                const bool eq = apply_word(w, pairs, q) == combinatorial_word(w, pairs, q);
                if (!eq && first_bad.empty()) first_bad = w;
                ok = ok && eq;
                ++cases;
            }
        json ev = {{"words", cases}};
        if (!first_bad.empty()) ev["first_mismatch"] = first_bad;
        rep.check("words", ok, ev);
    }
    if (checks.count("exclusion")) {
        for (int M = 1; M <= 3; ++M)
            for (int N = 1; N <= 2; ++N) {
                auto r = exclusion_check(M, N);
                json norms = json::array();
                for (const auto& v : r.norms) norms.push_back(rat(v));
                rep.check("exclusion M=" + std::to_string(M) + " N=" + std::to_string(N), r.ok,
                          {{"q_plus", rat(r.q_plus)}, {"q_minus", rat(r.q_minus)}, {"norms", norms}});
            }
    }
}

void cmd_moments(const Options& o, Report& rep) {
    if (o.max < 0 || o.max % 2) throw UsageError("--max must be a nonnegative even number");
    const std::vector<std::string> all_routes{"jacobi", "dyck", "wick", "matching", "fock"};
    std::vector<std::string> routes;
    if (o.routes == "all") routes = all_routes;
    else
        for (const auto& r : CLI::detail::split(o.routes, ',')) {
            if (std::find(all_routes.begin(), all_routes.end(), r) == all_routes.end()) throw UsageError("unknown route: " + r);
            if (std::find(routes.begin(), routes.end(), r) == routes.end()) routes.push_back(r);
        }
    const int half = o.max / 2;
    double work = 0;
    if (std::find(routes.begin(), routes.end(), "wick") != routes.end())
        work += std::pow(2.0, half) * static_cast<double>(double_factorial(2 * half - 1).get_d());
    if (std::find(routes.begin(), routes.end(), "matching") != routes.end())
        work += static_cast<double>(double_factorial(2 * half - 1).get_d());
    require_rank(o.specializations, 0, 8, "--specializations");
    if (o.specializations > 0) work += std::pow(2.0, o.specializations) * static_cast<double>(double_factorial(2 * o.specializations - 1).get_d());
    require_budget(o, work, "moment routes");
    rep.parameters = {{"max", o.max}, {"routes", routes}, {"specializations", o.specializations}, {"atoms", o.atoms}};

    const std::map<std::string, std::function<BivarPoly(int)>> route_fn{
        {"jacobi", [](int k) { return jacobi_moments(k); }},
        {"dyck", [](int k) { return dyck_moments(k); }},
        {"wick", [](int k) { return wick_moments(k); }},
        {"matching", [](int k) { return matching_moments(k); }},
        {"fock", [](int k) { return gaussian_moment_operator(k); }}};
    rep.csv_header = {"two_n", "route", "e_qp", "e_qm", "num", "den"};
    for (int two_n = 2; two_n <= o.max; two_n += 2) {
        json ev = json::object();
        std::optional<BivarPoly> ref;
        bool ok = true;
        for (const auto& r : routes) {
            auto p = route_fn.at(r)(two_n);
            ev[r] = poly(p);
            poly_rows(rep, {std::to_string(two_n), r}, p);
            if (!ref) ref = p;
            else if (!(p == *ref)) {
                ok = false;
                if (!ev.contains("first_difference")) {
                    auto e = BivarPoly::first_difference(*ref, p);
                    if (e) ev["first_difference"] = {{"route", r}, {"e_qp", e->first}, {"e_qm", e->second}};
                }
            }
        }
        rep.check("m" + std::to_string(two_n), ok, ev);
    }
    for (const auto& row : specializations(o.specializations))
        rep.check("specialization n=" + std::to_string(row.n),
                  row.semicircle_ok && row.at_2_2_ok && row.at_2_0_ok && row.pair_count_ok && row.drake_ok,
                  {{"semicircle", row.semicircle_ok},
                   {"at_2_2", rat(row.at_2_2)},
                   {"at_2_0", rat(row.at_2_0)},
                   {"pair_count", row.pair_count.get_str()},
                   {"cycles", upoly(row.cycles)},
                   {"non_nested", upoly(row.non_nested)},
                   {"no_right_crossing", upoly(row.no_right_crossing)},
                   {"from_moment", upoly(row.from_moment)}});
    if (o.atoms)
        for (int M = 1; M <= 3; ++M)
            for (int N = 1; N <= 2; ++N) {
                auto m = jacobi_moments(2 * M + 2, frac(-1, M + N), frac(M - N, M + N));
                Rational below = hankel_determinant(m, M + 1), at = hankel_determinant(m, M + 2);
                rep.check("atoms M=" + std::to_string(M) + " N=" + std::to_string(N), below > 0 && at == 0,
                          {{"hankel_order", M + 2}, {"det_below", rat(below)}, {"det", rat(at)}});
            }
}

void cmd_typed(const Options& o, Report& rep) {
    require_rank(o.bound, 0, 30, "--bound");
    std::vector<Rational> qs;
    if (!o.q.empty()) qs.push_back(need_rational(o.q, "--q"));
    const int n = o.n;
    if (qs.empty() && n < 0)
        for (long den = 1; den <= 5; ++den) {
            if (den == 1) qs.push_back(0);
            qs.push_back(frac(1, den));
            qs.push_back(frac(-1, den));
        }
    if (n >= 0) require_rank(n, 1, 6);
    require_budget(o, n > 0 ? group_size(n) * group_size(n) / 4 : 0, "D-class orbits");
    rep.parameters = {{"q", o.q.empty() ? json(nullptr) : json(o.q)}, {"n", n < 0 ? json(nullptr) : json(n)}, {"bound", o.bound}};
    for (const auto& q : qs) {
        auto r = classify_D(q, o.bound);
        json ev = {{"positive_definite", r.positive_definite}};
        if (r.witness)
            ev["witness"] = {{"lambda", parts(r.witness->first)}, {"mu", parts(r.witness->second)}, {"coefficient", rat(r.witness_value)}};
        const int scan_size = std::min(o.bound, 8);
        const bool scan_pd = !find_negative_coefficient_D(q, scan_size).has_value();
        ev["scan_size"] = scan_size;
        rep.check("q=" + to_string(q), scan_pd == r.positive_definite && (r.positive_definite || r.witness), ev);
    }
    if (n > 0) {
        for (int k = 1; k <= n; ++k) {
            auto cls = classes_D(k);
            std::map<std::pair<Partition, Partition>, int> count;
            bool constant = true;
            for (const auto& c : cls) {
                ++count[{c.type.rho_plus, c.type.rho_minus}];
                auto v = phi(cycle_type(c.elements.front()));
                for (const auto& s : c.elements) constant = constant && phi(cycle_type(s)) == v;
            }
            bool split_ok = true;
            json split = json::array();
            for (const auto& t : padded_classes(k)) {
                if (t.rho_minus.length() % 2) continue;
                const int c = count[{t.rho_plus, t.rho_minus}];
                split_ok = split_ok && c == (splits_in_D(t) ? 2 : 1);
                if (c == 2) split.push_back(ctype(t));
            }
            rep.check("splitting n=" + std::to_string(k), split_ok, {{"classes", cls.size()}, {"split", split}});
            rep.check("phi_constant n=" + std::to_string(k), constant);
        }
    }
}

// ---- output

json to_json(const Report& rep, double seconds) {
    json results = json::array();
    int pass = 0, fail = 0, skipped = 0;
    for (const auto& r : rep.results) {
        results.push_back({{"name", r.name}, {"status", r.status}, {"evidence", r.evidence}});
        (r.status == "pass" ? pass : r.status == "fail" ? fail : skipped) += 1;
    }
    return {{"command", rep.command},
            {"parameters", rep.parameters},
            {"status", fail ? "fail" : "pass"},
            {"summary", {{"pass", pass}, {"fail", fail}, {"skipped", skipped}}},
            {"results", results},
            {"timing", {{"seconds", seconds}}}};
}

void write_csv(const Report& rep, std::ostream& os) {
    if (!rep.csv_header.empty()) {
        for (std::size_t i = 0; i < rep.csv_header.size(); ++i) os << (i ? "," : "") << rep.csv_header[i];
        os << '\n';
        for (const auto& row : rep.csv_rows) {
            for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
            os << '\n';
        }
        return;
    }
    os << "name,status,evidence\n";
    for (const auto& r : rep.results) os << csv_cell(r.name) << ',' << r.status << ',' << csv_cell(r.evidence.dump()) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    if (const char* env = std::getenv("HYPEROCT_BUDGET")) {
        try {
            o.budget = std::stod(env);
        } catch (const std::exception&) {
            err << "error: HYPEROCT_BUDGET is not a number\n";
            return kUsage;
        }
    }

    CLI::App app{"Signed reflection functions on hyperoctahedral groups: verification tools", "hyperoct"};
    app.require_subcommand(1);
    app.fallthrough();
    auto* json_flag = app.add_flag("--json", "JSON report (default)");
    auto* csv_flag = app.add_flag("--csv", o.csv, "CSV output");
    json_flag->excludes(csv_flag);
    app.add_option("--out", o.out, "write the report to a file");
    app.add_option("--seed", o.seed, "seed for random pairs and generic vectors");
    app.add_option("--budget", o.budget, "cap on estimated work units")->check(CLI::PositiveNumber);

    std::map<std::string, std::function<void(const Options&, Report&)>> handlers;
    auto sub = [&](const char* name, const char* desc, auto fn) {
        handlers[name] = fn;
        return app.add_subcommand(name, desc);
    };

    auto* phi_c = sub("phi", "cycle type, reflection lengths and phi of a signed permutation", cmd_phi);
    phi_c->add_option("--word", o.word, "images of 1..n, e.g. -2,-4,-5,1,3,6")->required();
    phi_c->add_option("--qp", o.qp);
    phi_c->add_option("--qm", o.qm);

    auto* cl = sub("classify", "positive definiteness of phi on B(infinity)", cmd_classify);
    cl->add_option("--qp", o.qp)->required();
    cl->add_option("--qm", o.qm)->required();
    cl->add_option("--bound", o.bound, "witness search bound on total size");

    auto* ca = sub("classify-a", "positive definiteness of q^norm on S(infinity)", cmd_classify_a);
    ca->add_option("--q", o.q)->required();
    ca->add_option("--bound", o.bound);

    auto* ex = sub("expand", "character expansion of phi on every class of B(n)", cmd_expand);
    ex->add_option("--n", o.n);

    auto* ct = sub("chartable", "character table of B(n)", cmd_chartable);
    ct->add_option("--n", o.n);

    auto* gr = sub("gram", "exact PSD test of the Gram matrix of phi on B(n)", cmd_gram);
    gr->add_option("--n", o.n)->required();
    gr->add_option("--qp", o.qp)->required();
    gr->add_option("--qm", o.qm)->required();
    gr->add_flag("--allow-large", o.allow_large, "permit n >= 4");

    auto* fa = sub("factorize", "minimal non-mixing reflection factorization", cmd_factorize);
    fa->add_option("--word", o.word)->required();

    auto* sw = sub("schur-weyl", "tensor representation realizing phi", cmd_schur_weyl);
    sw->add_option("--M", o.M);
    sw->add_option("--N", o.N);
    sw->add_option("--eps", o.eps);
    sw->add_option("--n", o.n);

    auto* hi = sub("hirai", "extreme-character formula against phi", cmd_hirai);
    hi->add_option("--M", o.M);
    hi->add_option("--N", o.N);
    hi->add_option("--eps", o.eps);
    hi->add_option("--n", o.n);
    hi->add_flag("--degenerate", o.degenerate, "q+ = 0 family, kappa = q-");
    hi->add_option("--qm", o.qm);

    auto* pp = sub("pairpart", "symmetric pair partitions, hat matching and cycles", cmd_pairpart);
    pp->add_option("--n", o.n);
    pp->add_option("--eps", o.eps_word, "admissibility word in {1,*}");
    pp->add_flag("--perfect", o.perfect);
    pp->add_option("--blocks", o.blocks, "JSON array of blocks, e.g. [[-1,3],[-3,1]]");

    auto* fv = sub("fock-verify", "operator identities on the deformed Fock space", cmd_fock);
    fv->add_option("--d", o.d);
    fv->add_option("--level", o.level);
    fv->add_option("--word-length", o.word_length);
    fv->add_option("--checks", o.checks, "all or a list of prop1,annihilator,adjoint,commutation,words,exclusion");

    auto* mo = sub("moments", "Gaussian moments by five routes", cmd_moments);
    mo->add_option("--max", o.max);
    mo->add_option("--routes", o.routes, "all or a list of jacobi,dyck,wick,matching,fock");
    mo->add_option("--specializations", o.specializations, "rows n = 1..k");
    mo->add_flag("--atoms", o.atoms, "Hankel check of finite-atom moment sequences");

    auto* td = sub("typed", "type D restriction: classes and classification", cmd_typed);
    td->add_option("--q", o.q);
    td->add_option("--n", o.n);
    td->add_option("--bound", o.bound);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    Report rep;
    for (auto* s : app.get_subcommands()) rep.command = s->get_name();
    const auto start = std::chrono::steady_clock::now();
    try {
        handlers.at(rep.command)(o, rep);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::ofstream file;
    if (!o.out.empty()) {
        file.open(o.out);
        if (!file) {
            err << "error: cannot open " << o.out << '\n';
            return kUsage;
        }
    }
    std::ostream& os = o.out.empty() ? out : file;
    if (o.csv) write_csv(rep, os);
    else os << to_json(rep, seconds).dump(2) << '\n';
    return rep.failed() ? kFail : kPass;
}

}  // namespace hyperoct::cli
