// thetadic: command-line front door for exact theta-adic arithmetic.
//
// Subcommands: expand, eval, norm, add, mul, invert, reps, qc, verify.
// Elements are written exactly ("2", "-3+5*theta", "theta^-2"); decimal
// input is rejected.  Exit codes: 0 ok, 1 violation found, 2 usage error,
// 3 precision/radius shortfall.

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <string>

#include "thetadic/decimal.hpp"
#include "thetadic/invert.hpp"
#include "thetadic/model_set.hpp"
#include "thetadic/multiops.hpp"

using json = nlohmann::ordered_json;
using namespace thetadic;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------- parsing

// Exact element grammar: sum of terms  int | [int*]theta[^int].
RingElt parse_elt(const ThetaParams& prm, const std::string& text) {
    if (text.find('.') != std::string::npos ||
        text.find('/') != std::string::npos)
        throw UsageError("decimal or fractional input rejected: " + text);
    RingElt acc = make_int(prm, 0);
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace((unsigned char)text[i])) ++i;
    };
    skip_ws();
    bool first = true;
    while (i < text.size()) {
        int sign = 1;
        skip_ws();
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            throw UsageError("expected '+' or '-' in: " + text);
        }
        skip_ws();
        std::string num;
        while (i < text.size() && std::isdigit((unsigned char)text[i]))
            num += text[i++];
        skip_ws();
        bool has_theta = false;
        long exp = 1;
        if (i < text.size() && (text[i] == '*' || text[i] == 't')) {
            if (text[i] == '*') {
                ++i;
                skip_ws();
            }
            if (text.compare(i, 5, "theta") != 0)
                throw UsageError("bad term in: " + text);
            i += 5;
            has_theta = true;
            skip_ws();
            if (i < text.size() && text[i] == '^') {
                ++i;
                skip_ws();
                std::string es;
                if (i < text.size() && (text[i] == '-' || text[i] == '+'))
                    es += text[i++];
                while (i < text.size() && std::isdigit((unsigned char)text[i]))
                    es += text[i++];
                if (es.empty() || es == "-" || es == "+")
                    throw UsageError("bad exponent in: " + text);
                exp = std::stol(es);
            }
        }
        if (num.empty() && !has_theta)
            throw UsageError("empty term in: " + text);
        Int coeff = num.empty() ? Int(1) : Int(num);
        coeff *= sign;
        RingElt term = has_theta ? theta_pow(prm, exp) * coeff
                                 : make_int(prm, coeff);
        acc = acc + term;
        first = false;
        skip_ws();
    }
    if (first) throw UsageError("empty element");
    return acc;
}

std::string word_str(const GreedyWord& w) {
    if (w.is_zero()) return "0";
    std::string out;
    if (w.sign < 0) out += "-";
    if (w.t_exp == -1) out += "T^-1*(";
    bool first = true;
    for (long e = w.hi(); e >= w.lo; --e) {
        long d = w.digit_at(e);
        if (d == 0) continue;
        if (!first) out += "+";
        first = false;
        if (d != 1 || e == 0) out += std::to_string(d);
        if (e != 0) {
            if (d != 1) out += "*";
            out += "theta";
            if (e != 1) out += "^" + std::to_string(e);
        }
    }
    if (w.t_exp == -1) out += ")";
    return out;
}

// ------------------------------------------------------------------ json

json word_to_json(const GreedyWord& w) {
    json j;
    j["sign"] = w.sign;
    j["t_exp"] = w.t_exp;
    j["lo"] = w.is_zero() ? 0 : w.lo;
    j["digits"] = w.is_zero() ? std::vector<long>{} : w.digits;
    return j;
}

json series_to_json(const LaurentSeries& s) {
    json j;
    j["sign"] = s.sign;
    j["t_exp"] = s.t_exp;
    j["lo"] = s.is_zero() ? 0 : s.lo;
    j["head"] = s.head;
    json tail;
    switch (s.tail) {
        case TailKind::Finite:
            tail["kind"] = "finite";
            break;
        case TailKind::Periodic:
            tail["kind"] = "periodic";
            tail["period"] = s.period;
            break;
        case TailKind::Truncated:
            tail["kind"] = "truncated";
            tail["precision"] = s.precision;
            break;
    }
    j["tail"] = tail;
    return j;
}

LaurentSeries series_from_json(const json& j) {
    LaurentSeries s;
    s.sign = j.at("sign").get<int>();
    s.t_exp = j.at("t_exp").get<int>();
    s.lo = j.at("lo").get<long>();
    s.head = j.at("head").get<std::vector<long>>();
    const json& tail = j.at("tail");
    std::string kind = tail.at("kind").get<std::string>();
    if (kind == "finite") {
        s.tail = TailKind::Finite;
    } else if (kind == "periodic") {
        s.tail = TailKind::Periodic;
        s.period = tail.at("period").get<std::vector<long>>();
    } else if (kind == "truncated") {
        s.tail = TailKind::Truncated;
        s.precision = tail.at("precision").get<long>();
    } else {
        throw UsageError("unknown tail kind: " + kind);
    }
    return s;
}

json multivalue_to_json(const MultiValue& mv, const ThetaParams& prm,
                        int digits) {
    json members = json::array();
    for (const auto& m : mv.members) {
        json e;
        e["series"] = series_to_json(m.series);
        e["exact"] = m.exact;
        e["note"] = m.note;
        if (!m.series.is_zero()) {
            ConjValue cv = conj_value(
                m.series, prm,
                m.series.tail == TailKind::Truncated ? m.series.precision : 0);
            e["conj_value"] = to_decimal(cv.center, digits);
            if (!cv.exact) e["conj_error"] = to_decimal(cv.radius, digits);
        }
        members.push_back(e);
    }
    return json{{"members", members}};
}

// ------------------------------------------------------------ run config

struct RunConfig {
    long a = 1;
    int n = 1;
    long precision = 64;
    std::string radius = "100";
    std::string format = "json";
    unsigned long seed = 20240501;

    ThetaParams params() const { return ThetaParams(a, n); }
    FieldElt radius_value(const ThetaParams& prm) const {
        return FieldElt(parse_elt(prm, radius));
    }
    bool json_out() const { return format == "json"; }
};

void add_common(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--a", cfg.a, "trace of theta")->envname("THETADIC_A");
    cmd->add_option("--n", cfg.n, "theta^2 = a*theta + n, n in {1,-1}")
        ->envname("THETADIC_N");
    cmd->add_option("--precision", cfg.precision, "series precision M")
        ->envname("THETADIC_PRECISION");
    cmd->add_option("--radius", cfg.radius, "radius R (exact element)")
        ->envname("THETADIC_RADIUS");
    cmd->add_option("--format", cfg.format, "json|plain")
        ->envname("THETADIC_FORMAT");
    cmd->add_option("--seed", cfg.seed, "seed for randomized sweeps")
        ->envname("THETADIC_SEED");
}

void emit(const RunConfig& cfg, const json& j, const std::string& plain) {
    if (cfg.json_out())
        std::cout << j.dump() << "\n";
    else
        std::cout << plain << "\n";
}

// ------------------------------------------------------------ verify

struct VerifyOptions {
    long a_max = 5;
    long len = 8;
    long count = 20000;
    long trunc_max = 200;
};

std::vector<ThetaParams> sweep_sets(long a_max) {
    std::vector<ThetaParams> sets;
    for (long a = 1; a <= a_max; ++a) sets.emplace_back(a, 1);
    for (long a = 3; a <= a_max; ++a) sets.emplace_back(a, -1);
    return sets;
}

RingElt random_elt(const ThetaParams& prm, std::mt19937_64& rng, long bound) {
    std::uniform_int_distribution<long> d(-bound, bound);
    Int p(d(rng)), q(d(rng));
    return make_elt(prm, p, q);
}

RingElt random_nonzero(const ThetaParams& prm, std::mt19937_64& rng,
                       long bound) {
    for (;;) {
        RingElt x = random_elt(prm, rng, bound);
        if (!x.is_zero()) return x;
    }
}

int verify_parry(const RunConfig&, const VerifyOptions& vo) {
    for (const auto& prm : sweep_sets(vo.a_max)) {
        const long maxd = prm.max_digit();
        std::vector<long> digits(static_cast<size_t>(vo.len), 0);
        for (;;) {
            bool adm = is_greedy(digits, prm);
            GreedyWord w;
            size_t first = 0;
            while (first < digits.size() && digits[first] == 0) ++first;
            if (first < digits.size()) {
                w.sign = 1;
                w.lo = static_cast<long>(first);
                w.digits.assign(digits.begin() + static_cast<long>(first),
                                digits.end());
                while (w.digits.back() == 0) w.digits.pop_back();
            }
            bool fixes = expand(evaluate(w, prm)) == w;
            if (adm != fixes) {
                std::cerr << "parry violation: " << prm.describe()
                          << " word=" << word_str(w) << " is_greedy=" << adm
                          << " roundtrip=" << fixes << "\n";
                return 1;
            }
            long pos = 0;
            while (pos < vo.len && digits[static_cast<size_t>(pos)] == maxd)
                digits[static_cast<size_t>(pos++)] = 0;
            if (pos == vo.len) break;
            ++digits[static_cast<size_t>(pos)];
        }
        std::cout << "parry ok: " << prm.describe() << " len<=" << vo.len
                  << "\n";
    }
    return 0;
}

int verify_carry(const RunConfig&, const VerifyOptions&) {
    for (long a = 1; a <= 20; ++a) {
        ThetaParams prm(a, 1);
        for (long i = 1; i <= a; ++i)
            for (long k = -10; k <= 10; ++k)
                if (!carry_identity_check(prm, i, k)) {
                    std::cerr << "carry violation n=+1 a=" << a << " i=" << i
                              << " k=" << k << "\n";
                    return 1;
                }
    }
    for (long a = 3; a <= 20; ++a) {
        ThetaParams prm(a, -1);
        for (long i = 1; i <= a - 1; ++i)
            for (long k = -10; k <= 10; ++k)
                if (!carry_identity_check(prm, i, k)) {
                    std::cerr << "carry violation n=-1 a=" << a << " i=" << i
                              << " k=" << k << "\n";
                    return 1;
                }
        for (long k = 1; k <= 10; ++k)
            for (long m = -5; m <= 5; ++m)
                if (!forbidden_block_identity_check(prm, m, k)) {
                    std::cerr << "block violation a=" << a << " k=" << k
                              << " m=" << m << "\n";
                    return 1;
                }
    }
    std::cout << "carry identities ok (a<=20)\n";
    return 0;
}

int verify_infratriangle(const RunConfig& cfg, const VerifyOptions& vo) {
    for (const auto& prm : sweep_sets(vo.a_max)) {
        std::mt19937_64 rng(cfg.seed);
        long max_seen[3] = {0, 0, 0};  // o0/o0, o1/o1, mixed
        for (long i = 0; i < vo.count; ++i) {
            RingElt x = random_nonzero(prm, rng, 2000);
            RingElt y = random_nonzero(prm, rng, 2000);
            long k = infratriangle_ratio(x, y);
            long bound, cls;
            if (prm.n() == 1) {
                bound = 2;
                cls = 0;
            } else {
                bool x0 = in_o0(x), y0 = in_o0(y);
                cls = (x0 && y0) ? 0 : (!x0 && !y0 ? 1 : 2);
                bound = cls == 0 ? 1 : (cls == 1 ? 2 : 4);
            }
            max_seen[cls] = std::max(max_seen[cls], k);
            if (k > bound) {
                std::cerr << "infratriangle violation " << prm.describe()
                          << " x=" << x.str() << " y=" << y.str() << " k=" << k
                          << "\n";
                return 1;
            }
        }
        std::cout << "infratriangle ok: " << prm.describe()
                  << " observed max exponents";
        for (int c = 0; c < 3; ++c) std::cout << " " << max_seen[c];
        std::cout << "\n";
    }
    return 0;
}

int verify_inframult(const RunConfig& cfg, const VerifyOptions& vo) {
    for (const auto& prm : sweep_sets(vo.a_max)) {
        std::mt19937_64 rng(cfg.seed);
        std::uniform_int_distribution<long> kd(2, 4);
        for (long i = 0; i < vo.count; ++i) {
            long k = kd(rng);
            std::vector<RingElt> xs;
            bool all0 = true, all1 = true;
            for (long j = 0; j < k; ++j) {
                xs.push_back(random_nonzero(prm, rng, 500));
                (in_o0(xs.back()) ? all1 : all0) = false;
            }
            long g = inframult_exponent_gap(xs);
            bool ok;
            if (prm.n() == 1)
                ok = -k <= g && g <= k;
            else if (k == 2)
                ok = 0 <= g && g <= (all1 ? 2 : 1);
            else
                ok = 0 <= g && g <= 2 * (k - 1);
            if (!ok) {
                std::cerr << "inframult violation " << prm.describe()
                          << " k=" << k << " gap=" << g << "\n";
                return 1;
            }
        }
        std::cout << "inframult ok: " << prm.describe() << "\n";
    }
    return 0;
}

int verify_inversion(const RunConfig&, const VerifyOptions& vo) {
    int rc = 0;
    for (int n : {1, -1}) {
        for (long a = (n == 1 ? 1 : 3); a <= 12; ++a) {
            ThetaParams prm(a, n);
            for (long p : {2, 3, 5, 7, 11, 13}) {
                InverseSeries inv = invert_integer(prm, p);
                if (inv.single_prime() && !inv.prime().t_special) {
                    for (long i = 1; i <= 60; ++i) {
                        long d = inv.prime().digit(i);
                        long lo = n == 1 ? 0 : -1;
                        long hi = n == 1 ? a : a - 1;
                        if (d < lo || d > hi) {
                            std::cerr << "digit range violation a=" << a
                                      << " n=" << n << " p=" << p << " e_" << i
                                      << "=" << d << "\n";
                            return 1;
                        }
                    }
                }
                for (long k = 1; k <= vo.trunc_max; ++k) {
                    NormValue r = residual_norm(inv, k);
                    if (r.is_zero()) continue;
                    if (*r.v < k - 4) {
                        std::cerr << "residual violation a=" << a << " n=" << n
                                  << " p=" << p << " k=" << k
                                  << " exponent=" << *r.v << " < k-4\n";
                        rc = 1;
                    }
                }
            }
        }
    }
    if (rc == 0) std::cout << "inversion ok (primes<=13, a<=12)\n";
    return rc;
}

int verify_qc_dual(const RunConfig& cfg, const VerifyOptions& vo) {
    for (const auto& prm : sweep_sets(std::min(vo.a_max, 5L))) {
        FieldElt R = cfg.radius_value(prm);
        ModelSet ms = model_set(prm, z_theta_window(prm), R);
        long K = 0;
        FieldElt pw(make_int(prm, 1)), th(make_theta(prm));
        while (cmp_real(pw * th, R) <= 0) {
            pw = pw * th;
            ++K;
        }
        std::vector<RingElt> words;
        std::vector<long> digits(static_cast<size_t>(K) + 1, 0);
        for (;;) {
            if (is_greedy(digits, prm)) {
                RingElt v = make_int(prm, 0);
                for (auto it = digits.rbegin(); it != digits.rend(); ++it)
                    v = theta_shift(v, 1) + make_int(prm, *it);
                if (cmp_real(FieldElt(v), R) <= 0) words.push_back(v);
            }
            long pos = 0;
            while (pos <= K &&
                   digits[static_cast<size_t>(pos)] == prm.max_digit())
                digits[static_cast<size_t>(pos++)] = 0;
            if (pos > K) break;
            ++digits[static_cast<size_t>(pos)];
        }
        std::sort(words.begin(), words.end(), less_real);
        words.erase(std::unique(words.begin(), words.end()), words.end());
        std::vector<RingElt> pos_pts;
        for (const RingElt& p : ms.points)
            if (sign_real(p) >= 0) pos_pts.push_back(p);
        if (pos_pts != words) {
            std::cerr << "qc duality violation: " << prm.describe()
                      << " sizes " << pos_pts.size() << " vs " << words.size()
                      << "\n";
            return 1;
        }
        std::cout << "qc-dual ok: " << prm.describe() << " points "
                  << pos_pts.size() << "\n";
    }
    return 0;
}

int verify_oscillation(const RunConfig&, const VerifyOptions& vo) {
    for (long a = 1; a <= vo.a_max; ++a) {
        ThetaParams prm(a, 1);
        OscillationReport rep = infraoscillation_witness(prm, 20);
        if (!rep.f_pattern_ok || !rep.g_pattern_ok || !rep.differences_ok) {
            std::cerr << "oscillation violation a=" << a << "\n";
            return 1;
        }
    }
    std::cout << "oscillation ok (a<=" << vo.a_max << ")\n";
    return 0;
}

int verify_hermite(const RunConfig&, const VerifyOptions&) {
    for (long n = 2; n <= 100; ++n)
        for (long b = 1; b < n; ++b)
            if (!hermite_identity_check(n, b)) {
                std::cerr << "hermite violation n=" << n << " b=" << b << "\n";
                return 1;
            }
    std::cout << "hermite ok (n<=100)\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact theta-adic arithmetic over a real quadratic unit"};
    app.require_subcommand(1);
    RunConfig cfg;

    std::string elt_text, elt_text2;
    std::vector<long> digits_opt;
    long lo_opt = 0;
    int sign_opt = 1, texp_opt = 0;
    long trunc_opt = 16;
    std::string window_opt = "m";
    std::string suite;
    VerifyOptions vo;

    auto* c_expand =
        app.add_subcommand("expand", "greedy expansion of an element");
    add_common(c_expand, cfg);
    c_expand->add_option("element", elt_text)->required();

    auto* c_eval = app.add_subcommand("eval", "evaluate a digit word");
    add_common(c_eval, cfg);
    c_eval->add_option("--digits", digits_opt, "digits from lo upward")
        ->required()
        ->delimiter(',');
    c_eval->add_option("--lo", lo_opt, "lowest exponent");
    c_eval->add_option("--sign", sign_opt, "+1 or -1");
    c_eval->add_option("--t-exp", texp_opt, "0 or -1");

    auto* c_norm = app.add_subcommand("norm", "theta-adic infranorm");
    add_common(c_norm, cfg);
    c_norm->add_option("element", elt_text)->required();

    auto* c_add = app.add_subcommand("add", "multivalued sum");
    add_common(c_add, cfg);
    c_add->add_option("x", elt_text, "exact element or JSON series")
        ->required();
    c_add->add_option("y", elt_text2, "exact element or JSON series")
        ->required();

    auto* c_mul = app.add_subcommand("mul", "multivalued product");
    add_common(c_mul, cfg);
    c_mul->add_option("x", elt_text, "exact element or JSON series")
        ->required();
    c_mul->add_option("y", elt_text2, "exact element or JSON series")
        ->required();

    auto* c_invert = app.add_subcommand("invert", "invert an integer >= 2");
    add_common(c_invert, cfg);
    c_invert->add_option("integer", elt_text)->required();
    c_invert->add_option("--trunc", trunc_opt, "truncation length");

    auto* c_reps =
        app.add_subcommand("reps", "the three series over an element");
    add_common(c_reps, cfg);
    c_reps->add_option("element", elt_text)->required();

    auto* c_qc = app.add_subcommand("qc", "cut-and-project point list");
    add_common(c_qc, cfg);
    c_qc->add_option("--window", window_opt,
                     "A | m | ztheta | lo,hi,[oc][oc] with exact endpoints");

    auto* c_verify = app.add_subcommand("verify", "run a named property suite");
    add_common(c_verify, cfg);
    c_verify
        ->add_option("suite", suite,
                     "parry|carry|infratriangle|inframult|inversion|qc-dual|"
                     "oscillation|hermite")
        ->required();
    c_verify->add_option("--a-max", vo.a_max);
    c_verify->add_option("--len", vo.len);
    c_verify->add_option("--count", vo.count);
    c_verify->add_option("--trunc-max", vo.trunc_max);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        ThetaParams prm = cfg.params();
        if (cfg.precision < 1) throw UsageError("--precision must be >= 1");

        if (c_expand->parsed()) {
            GreedyWord w = expand(parse_elt(prm, elt_text));
            emit(cfg, word_to_json(w), word_str(w));
        } else if (c_eval->parsed()) {
            GreedyWord w;
            w.sign = sign_opt;
            w.t_exp = texp_opt;
            w.lo = lo_opt;
            w.digits = digits_opt;
            if (w.digits.empty()) w.sign = 0;
            RingElt v = evaluate(w, prm);
            json j;
            j["p"] = v.p().get_str();
            j["q"] = v.q().get_str();
            j["value"] = to_decimal(v, 12);
            emit(cfg, j, v.str());
        } else if (c_norm->parsed()) {
            NormValue nv = infranorm(parse_elt(prm, elt_text));
            json j;
            if (nv.is_zero())
                j["exponent"] = "zero";
            else
                j["exponent"] = nv.log_value();
            emit(cfg, j,
                 nv.is_zero() ? "zero"
                              : "theta^" + std::to_string(nv.log_value()));
        } else if (c_add->parsed() || c_mul->parsed()) {
            bool is_add = c_add->parsed();
            auto parse_operand = [&](const std::string& t) {
                if (!t.empty() && t.front() == '{')
                    return series_from_json(json::parse(t));
                return series_from_word(expand(parse_elt(prm, t)));
            };
            LaurentSeries x = parse_operand(elt_text);
            LaurentSeries y = parse_operand(elt_text2);
            MultiValue mv = is_add ? multi_add(x, y, prm, cfg.precision)
                                   : multi_mul(x, y, prm, cfg.precision);
            std::string plain;
            for (const auto& m : mv.members)
                plain += series_str(m.series) + "  (" + m.note + ")\n";
            emit(cfg, multivalue_to_json(mv, prm, 12), plain);
        } else if (c_invert->parsed()) {
            Int n(elt_text);
            InverseSeries inv = invert_integer(prm, n);
            RingElt res = inv.residual(trunc_opt);
            GreedyWord rw = expand(res);
            json j;
            j["n"] = n.get_str();
            j["trunc"] = trunc_opt;
            j["residual"] = word_str(rw);
            if (!res.is_zero()) j["residual_exponent"] = *infranorm(res).v;
            if (inv.single_prime() && !inv.prime().t_special) {
                std::vector<long> ds;
                for (long i = 0; i <= std::min(trunc_opt, 40L); ++i)
                    ds.push_back(inv.prime().digit(i));
                j["digits"] = ds;
                j["period"] = inv.prime().block;
            }
            emit(cfg, j, "residual " + word_str(rw));
        } else if (c_reps->parsed()) {
            MultiValue mv = representatives(parse_elt(prm, elt_text));
            std::string plain;
            for (const auto& m : mv.members)
                plain += series_str(m.series) + "  (" + m.note + ")\n";
            emit(cfg, multivalue_to_json(mv, prm, 12), plain);
        } else if (c_qc->parsed()) {
            FieldElt R = cfg.radius_value(prm);
            ModelSet ms;
            if (window_opt == "A")
                ms = qc_ring_A(prm, R);
            else if (window_opt == "m")
                ms = qc_ideal_m(prm, R);
            else if (window_opt == "ztheta")
                ms = model_set(prm, z_theta_window(prm), R);
            else {
                auto c1 = window_opt.find(',');
                auto c2 = window_opt.find(',', c1 + 1);
                if (c1 == std::string::npos)
                    throw UsageError("bad window: " + window_opt);
                Window w;
                w.lo = FieldElt(parse_elt(prm, window_opt.substr(0, c1)));
                std::string hi = c2 == std::string::npos
                                     ? window_opt.substr(c1 + 1)
                                     : window_opt.substr(c1 + 1, c2 - c1 - 1);
                w.hi = FieldElt(parse_elt(prm, hi));
                std::string flags =
                    c2 == std::string::npos ? "co" : window_opt.substr(c2 + 1);
                w.lo_closed = flags.size() > 0 && flags[0] == 'c';
                w.hi_closed = flags.size() > 1 && flags[1] == 'c';
                ms = model_set(prm, w, R);
            }
            json hdr;
            hdr["window"] = {{"lo", ms.window.lo.str()},
                             {"hi", ms.window.hi.str()},
                             {"lo_closed", ms.window.lo_closed},
                             {"hi_closed", ms.window.hi_closed}};
            hdr["radius"] = ms.radius.str();
            hdr["count"] = ms.points.size();
            json alpha = json::array();
            if (ms.points.size() >= 2)
                for (const RingElt& g : gap_alphabet(ms))
                    alpha.push_back(g.str());
            hdr["gap_alphabet"] = alpha;
            std::cout << hdr.dump() << "\n";
            for (const RingElt& p : ms.points) {
                json row;
                row["p"] = p.p().get_str();
                row["q"] = p.q().get_str();
                auto dec = to_decimal_pair(p, 10);
                row["value"] = dec.value;
                row["conj"] = dec.conjugate;
                std::cout << row.dump() << "\n";
            }
        } else if (c_verify->parsed()) {
            std::map<std::string,
                     int (*)(const RunConfig&, const VerifyOptions&)>
                suites{{"parry", verify_parry},
                       {"carry", verify_carry},
                       {"infratriangle", verify_infratriangle},
                       {"inframult", verify_inframult},
                       {"inversion", verify_inversion},
                       {"qc-dual", verify_qc_dual},
                       {"oscillation", verify_oscillation},
                       {"hermite", verify_hermite}};
            auto it = suites.find(suite);
            if (it == suites.end()) throw UsageError("unknown suite: " + suite);
            return it->second(cfg, vo);
        }
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const precision_error& e) {
        std::cerr << "precision/radius shortfall: " << e.what() << "\n";
        return 3;
    } catch (const expansion_error& e) {
        std::cerr << "expansion budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
