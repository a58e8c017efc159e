// Command-line front end: exact steady-state computations for the open
// boundary TASEP. P(tau) comes from the determinant formula, Z_n from the
// closed form, and `verify` cross-checks every route against brute-force
// enumeration and the exact Markov solve.

#include "tasep/serialization.hpp"
#include "tasep/tasep.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace tasep;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

// Exhaustive commands refuse words longer than this unless --unsafe-n.
constexpr int kEnumerationGuard = 8;

struct EvalPoint {
    BigRational alpha;
    BigRational beta;
};

EvalPoint parse_eval(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw std::invalid_argument("--eval expects 'alpha,beta' with p/q literals");
    }
    EvalPoint point{parse_rational(text.substr(0, comma)),
                    parse_rational(text.substr(comma + 1))};
    if (point.alpha <= 0 || point.alpha > 1 || point.beta <= 0 || point.beta > 1) {
        throw std::invalid_argument("eval point must lie in (0, 1]^2");
    }
    return point;
}

StateWord parse_word(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("state word must be nonempty");
    return StateWord(text);
}

void check_guard(int n, bool unsafe, const char* what) {
    if (!unsafe && n > kEnumerationGuard) {
        throw size_error(std::string(what) + " limited to n <= " +
                         std::to_string(kEnumerationGuard) + " (see --unsafe-n)");
    }
}

void emit(const nlohmann::json& payload) { std::cout << payload.dump() << "\n"; }

int cmd_prob(const std::string& word_text, bool json, const std::string& eval_text) {
    const StateWord tau = parse_word(word_text);
    const Shape shape = shape_of_word(tau);
    const LaurentPolynomial numerator = det_formula(tau);
    const LaurentPolynomial denominator = z_n_derrida(tau.n());

    if (json) {
        nlohmann::json payload{{"word", tau.str()},
                               {"n", tau.n()},
                               {"k", tau.k()},
                               {"shape", shape_json(shape)},
                               {"numerator", poly_json(numerator)},
                               {"denominator", poly_json(denominator)}};
        if (!eval_text.empty()) {
            const EvalPoint at = parse_eval(eval_text);
            const BigRational value =
                numerator.eval(at.alpha, at.beta) / denominator.eval(at.alpha, at.beta);
            payload["eval"] = {{"alpha", rational_str(at.alpha)},
                               {"beta", rational_str(at.beta)},
                               {"probability", rational_str(value)}};
        }
        emit(payload);
    } else {
        std::cout << "word " << tau.str() << "  (n = " << tau.n() << ", k = " << tau.k()
                  << ", shape " << shape.str() << ")\n";
        std::cout << "numerator   = " << numerator.str() << "\n";
        std::cout << "denominator = " << denominator.str() << "\n";
        if (!eval_text.empty()) {
            const EvalPoint at = parse_eval(eval_text);
            const BigRational value =
                numerator.eval(at.alpha, at.beta) / denominator.eval(at.alpha, at.beta);
            std::cout << "Pr = " << rational_str(value) << "\n";
        }
    }
    return kExitOk;
}

int cmd_tableaux(const std::string& word_text, bool list, bool json, bool unsafe) {
    const StateWord tau = parse_word(word_text);
    check_guard(tau.n(), unsafe, "tableaux");
    const auto tableaux = enumerate_tableaux(tau);
    LaurentPolynomial total;
    for (const auto& t : tableaux) total += tableau_weight(t);

    if (json) {
        nlohmann::json payload{{"word", tau.str()},
                               {"count", tableaux.size()},
                               {"total", poly_json(total)}};
        if (list) {
            nlohmann::json items = nlohmann::json::array();
            for (const auto& t : tableaux) {
                nlohmann::json item = tableau_json(t);
                item["weight"] = poly_json(tableau_weight(t));
                items.push_back(std::move(item));
            }
            payload["tableaux"] = std::move(items);
        }
        emit(payload);
    } else {
        std::cout << "type " << tau.str() << ": " << tableaux.size()
                  << " tableaux, total weight " << total.str() << "\n";
        if (list) {
            for (std::size_t i = 0; i < tableaux.size(); ++i) {
                std::cout << "[" << i + 1 << "] weight "
                          << tableau_weight(tableaux[i]).str() << "\n"
                          << tableaux[i].str();
            }
        }
    }
    return kExitOk;
}

int cmd_paths(const std::string& word_text, bool list, bool json, bool unsafe) {
    const StateWord tau = parse_word(word_text);
    check_guard(tau.n(), unsafe, "paths");
    const Shape shape = shape_of_word(tau);
    const auto paths = enumerate_paths(shape);
    LaurentPolynomial total;
    for (const auto& c : paths) total += path_total_weight(c);

    if (json) {
        nlohmann::json payload{{"word", tau.str()},
                               {"shape", shape_json(shape)},
                               {"count", paths.size()},
                               {"total", poly_json(total)}};
        if (list) {
            nlohmann::json items = nlohmann::json::array();
            for (const auto& c : paths) {
                nlohmann::json item = path_json(c);
                item["pwt"] = poly_json(path_weight(c));
                item["tableau_weight"] = poly_json(tableau_weight(path_to_tableau(c)));
                items.push_back(std::move(item));
            }
            payload["paths"] = std::move(items);
        }
        emit(payload);
    } else {
        std::cout << "shape " << shape.str() << ": " << paths.size()
                  << " paths, total weight " << total.str() << "\n";
        if (list) {
            for (const auto& c : paths) {
                std::cout << c.str() << "  pwt " << path_weight(c).str() << "  tableau "
                          << tableau_weight(path_to_tableau(c)).str() << "\n";
            }
        }
    }
    return kExitOk;
}

int cmd_matrix(const std::string& word_text, bool json) {
    const StateWord tau = parse_word(word_text);
    const Shape shape = shape_of_word(tau);
    const PolyMatrix m = a_matrix(shape);
    const LaurentPolynomial det = determinant(m);

    if (json) {
        emit(nlohmann::json{{"word", tau.str()},
                            {"k", shape.rows()},
                            {"shape", shape_json(shape)},
                            {"matrix", matrix_json(m)},
                            {"det", poly_json(det)}});
    } else {
        if (shape.rows() == 0) {
            std::cout << "empty matrix (k = 0)\n";
        }
        for (std::size_t i = 0; i < m.dimension(); ++i) {
            std::cout << "[";
            for (std::size_t j = 0; j < m.dimension(); ++j) {
                if (j > 0) std::cout << ", ";
                std::cout << m.at(i, j).str();
            }
            std::cout << "]\n";
        }
        std::cout << "det = " << det.str() << "\n";
    }
    return kExitOk;
}

int cmd_zn(int n, const std::string& method, bool json, bool unsafe) {
    if (n < 1) throw std::invalid_argument("zn requires n >= 1");
    const bool enumerate = method == "enumerate" || method == "both";
    const bool derrida = method == "derrida" || method == "both";
    if (enumerate) check_guard(n, unsafe, "zn --method enumerate");

    LaurentPolynomial closed, brute;
    if (derrida) closed = z_n_derrida(n);
    if (enumerate) brute = z_n_enumeration(n);
    const bool both = method == "both";
    const bool equal = !both || closed == brute;

    if (json) {
        nlohmann::json payload{{"n", n}, {"method", method}};
        if (derrida) payload["derrida"] = poly_json(closed);
        if (enumerate) payload["enumeration"] = poly_json(brute);
        if (both) payload["equal"] = equal;
        emit(payload);
    } else {
        if (derrida) std::cout << "Z_" << n << " (derrida)     = " << closed.str() << "\n";
        if (enumerate) std::cout << "Z_" << n << " (enumeration) = " << brute.str() << "\n";
        if (both) std::cout << "equality: " << (equal ? "PASS" : "FAIL") << "\n";
    }
    return equal ? kExitOk : kExitVerifyFailed;
}

int cmd_verify(int n_max, const std::vector<std::string>& eval_texts, bool json) {
    if (n_max < 1) throw std::invalid_argument("verify requires --n >= 1");
    if (n_max > 8) throw size_error("verify limited to n <= 8");

    std::vector<EvalPoint> points;
    if (eval_texts.empty()) {
        points = {{BigRational(1), BigRational(1)},
                  {BigRational(1, 2), BigRational(1, 3)},
                  {BigRational(3, 4), BigRational(1, 4)}};
    } else {
        for (const auto& text : eval_texts) points.push_back(parse_eval(text));
    }

    struct Check {
        std::string name;
        bool pass = true;
    };
    std::vector<Check> checks;

    {
        Check check{"sum_weights == det_formula (all words, n <= " +
                    std::to_string(n_max) + ")"};
        for (int n = 1; n <= n_max; ++n) {
            for (std::size_t idx = 0; idx < (std::size_t{1} << n); ++idx) {
                const StateWord tau = word_from_index(n, idx);
                if (!(sum_weights(tau) == det_formula(tau))) check.pass = false;
            }
        }
        checks.push_back(check);
    }
    {
        Check check{"tableau <-> path bijection and weight preservation"};
        for (int n = 1; n <= n_max; ++n) {
            for (std::size_t idx = 0; idx < (std::size_t{1} << n); ++idx) {
                const StateWord tau = word_from_index(n, idx);
                const Shape shape = shape_of_word(tau);
                for (const CatalanPath& c : enumerate_paths(shape)) {
                    const CatalanTableau t = path_to_tableau(c);
                    if (!validate_tableau(t) || !(tableau_to_path(t) == c) ||
                        !(path_total_weight(c) == tableau_weight(t)) ||
                        !(path_weight(c) == path_weight_by_walk(c))) {
                        check.pass = false;
                    }
                }
            }
        }
        checks.push_back(check);
    }
    {
        Check check{"entry agreement w_ij == A_ij"};
        for (int n = 1; n <= n_max; ++n) {
            for (std::size_t idx = 0; idx < (std::size_t{1} << n); ++idx) {
                const Shape shape = shape_of_word(word_from_index(n, idx));
                const TwistedDigraph g(shape);
                for (int i = 1; i <= shape.rows(); ++i) {
                    for (int j = 1; j <= shape.rows(); ++j) {
                        if (!(w_ij_enumerated(g, i, j) == a_ij_closed_form(shape, i, j))) {
                            check.pass = false;
                        }
                    }
                }
            }
        }
        checks.push_back(check);
    }
    {
        Check check{"lgv signed-family sum == det(w_ij) (shapes with k <= 6)"};
        for (int n = 1; n <= n_max; ++n) {
            for (std::size_t idx = 0; idx < (std::size_t{1} << n); ++idx) {
                const Shape shape = shape_of_word(word_from_index(n, idx));
                if (shape.rows() > 6 || shape.part(1) > 8) continue;
                if (!lgv_check(shape)) check.pass = false;
            }
        }
        checks.push_back(check);
    }
    {
        for (const EvalPoint& at : points) {
            Check check{"stationary distribution vs tableaux at (" +
                        rational_str(at.alpha) + ", " + rational_str(at.beta) + ")"};
            for (int n = 1; n <= n_max; ++n) {
                if (!verify_theorem_cw(ChainSpec(n, at.alpha, at.beta))) check.pass = false;
            }
            checks.push_back(check);
        }
    }
    {
        Check check{"z_n_derrida == z_n_enumeration"};
        for (int n = 1; n <= n_max; ++n) {
            if (!(z_n_derrida(n) == z_n_enumeration(n))) check.pass = false;
        }
        checks.push_back(check);
    }

    bool all_pass = true;
    for (const Check& check : checks) all_pass = all_pass && check.pass;

    if (json) {
        nlohmann::json items = nlohmann::json::array();
        for (const Check& check : checks) {
            items.push_back({{"name", check.name}, {"pass", check.pass}});
        }
        emit(nlohmann::json{{"n_max", n_max}, {"checks", items}, {"all_pass", all_pass}});
    } else {
        for (std::size_t i = 0; i < checks.size(); ++i) {
            std::cout << "[" << i + 1 << "] " << checks[i].name << ": "
                      << (checks[i].pass ? "PASS" : "FAIL") << "\n";
        }
        std::cout << (all_pass ? "all checks passed" : "some checks FAILED") << "\n";
    }
    return all_pass ? kExitOk : kExitVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact steady-state probabilities of the open-boundary TASEP"};
    app.require_subcommand(1);

    std::string word;
    std::string eval_text;
    std::vector<std::string> eval_texts;
    std::string format = "text";
    std::string method = "derrida";
    bool list = false;
    bool unsafe = false;
    int n = 0;

    auto add_format = [&format](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* prob = app.add_subcommand("prob", "stationary probability of a state");
    prob->add_option("word", word, "state word over {0,1}")->required();
    prob->add_option("--eval", eval_text, "evaluate at rational rates 'alpha,beta'");
    add_format(prob);

    CLI::App* verify = app.add_subcommand("verify", "run the cross-verification suite");
    verify->add_option("--n", n, "largest word length to verify")->required();
    verify->add_option("--eval", eval_texts, "rational rate pair 'alpha,beta' (repeatable)");
    add_format(verify);

    CLI::App* tableaux = app.add_subcommand("tableaux", "enumerate tableaux of a type");
    tableaux->add_option("word", word, "state word over {0,1}")->required();
    tableaux->add_flag("--list", list, "render each tableau");
    tableaux->add_flag("--unsafe-n", unsafe, "lift the enumeration guard");
    add_format(tableaux);

    CLI::App* paths = app.add_subcommand("paths", "enumerate Catalan paths of a type");
    paths->add_option("word", word, "state word over {0,1}")->required();
    paths->add_flag("--list", list, "list each path with its weights");
    paths->add_flag("--unsafe-n", unsafe, "lift the enumeration guard");
    add_format(paths);

    CLI::App* matrix = app.add_subcommand("matrix", "print the determinant-formula matrix");
    matrix->add_option("word", word, "state word over {0,1}")->required();
    add_format(matrix);

    CLI::App* zn = app.add_subcommand("zn", "partition function Z_n");
    zn->add_option("n", n, "system size")->required();
    zn->add_option("--method", method, "derrida | enumerate | both")
        ->check(CLI::IsMember({"derrida", "enumerate", "both"}));
    zn->add_flag("--unsafe-n", unsafe, "lift the enumeration guard");
    add_format(zn);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    const bool json = format == "json";
    try {
        if (app.got_subcommand(prob)) return cmd_prob(word, json, eval_text);
        if (app.got_subcommand(verify)) return cmd_verify(n, eval_texts, json);
        if (app.got_subcommand(tableaux)) return cmd_tableaux(word, list, json, unsafe);
        if (app.got_subcommand(paths)) return cmd_paths(word, list, json, unsafe);
        if (app.got_subcommand(matrix)) return cmd_matrix(word, json);
        if (app.got_subcommand(zn)) return cmd_zn(n, method, json, unsafe);
    } catch (const size_error& e) {
        std::cerr << "size error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
