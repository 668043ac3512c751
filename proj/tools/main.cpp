// modrep: exact computations around finite-dimensional representations of
// the projective modular group. All numeric output is exact: integers, "p/q"
// strings or "p/q+p/q*w" cyclotomic strings; identical inputs give
// byte-identical output.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "modrep/io.hpp"
#include "modrep/modrep.hpp"

namespace {

using modrep::Cyclotomic;
using modrep::DimVector;
using modrep::json;
using modrep::Matrix;
using modrep::Representation;

struct Options {
    bool text = false;
    std::string out_file;
};

json envelope(const std::string& command, json inputs, json result) {
    return json{{"command", command},
                {"inputs", std::move(inputs)},
                {"result", std::move(result)},
                {"version", modrep::kVersion}};
}

/// Rationals that are integers render as JSON numbers, the rest as "p/q".
json rational_to_json(const modrep::Rational& r) {
    if (r.is_integer() && r.numerator().fits_slong_p())
        return json(r.numerator().get_si());
    return json(r.to_string());
}

void emit(const Options& opt, const std::string& payload) {
    if (opt.out_file.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(opt.out_file, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file '" + opt.out_file + "'");
    out << payload;
}

std::string render_matrix_text(const Matrix& m) {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << "  [";
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << (j ? ", " : "") << m.at(i, j).to_string();
        os << "]\n";
    }
    return os.str();
}

// ---------------------------------------------------------------- commands

json run_dim(const std::string& alpha_text) {
    const DimVector alpha = DimVector::parse(alpha_text);
    const long long d = modrep::westbury_dim(alpha);
    return json{{"alpha", modrep::dimvector_to_json(alpha)},
                {"alpha_text", alpha.to_text()},
                {"n", alpha.total()},
                {"theta", modrep::theta(alpha)},
                {"d", d}};
}

json run_maxdim(long long n) {
    return json{{"n", n}, {"max_dim", modrep::max_simp_dim(n)}};
}

json run_enumerate(long long n) {
    json vectors = json::array();
    for (const DimVector& v : modrep::enumerate_admissible(n))
        vectors.push_back(modrep::dimvector_to_json(v));
    return json{{"n", n}, {"count", vectors.size()}, {"vectors", std::move(vectors)}};
}

json run_family(const std::string& name, const std::vector<std::string>& params) {
    const auto need = [&](std::size_t lo, std::size_t hi) {
        if (params.size() < lo || params.size() > hi)
            throw std::invalid_argument("family " + name + ": wrong number of parameters");
    };
    Representation rep = [&]() -> Representation {
        if (name == "one") {
            need(2, 2);
            return modrep::one_dim(std::stoi(params[0]), std::stoi(params[1]));
        }
        if (name == "M" || name == "N") {
            need(1, 2);
            const Cyclotomic s = Cyclotomic::parse(params[0]);
            const int power = params.size() == 2 ? std::stoi(params[1]) : 1;
            return name == "M" ? modrep::two_dim_M(s, power) : modrep::two_dim_N(s, power);
        }
        if (name == "three") {
            need(3, 3);
            return modrep::three_dim(Cyclotomic::parse(params[0]), Cyclotomic::parse(params[1]),
                                     Cyclotomic::parse(params[2]));
        }
        throw std::invalid_argument("family: unknown name '" + name +
                                    "' (expected one, M, N or three)");
    }();
    return modrep::representation_to_json(rep);
}

json run_check_simple(const std::string& source) {
    std::string raw;
    if (!source.empty() && source.front() == '{') {
        raw = source;
    } else if (source == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        raw = ss.str();
    } else {
        std::ifstream in(source, std::ios::binary);
        if (!in) throw std::invalid_argument("check-simple: cannot read '" + source + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        raw = ss.str();
    }
    json doc;
    try {
        doc = json::parse(raw);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("check-simple: invalid JSON: ") + e.what());
    }
    if (doc.is_object() && doc.contains("result")) doc = doc.at("result");  // envelope input

    const Representation rep = modrep::representation_from_json(doc);
    if (!modrep::verify_relations(rep))
        throw std::invalid_argument("check-simple: relations X^3=I, Y^2=I violated");
    const DimVector alpha = modrep::dimension_vector_of(rep);
    return json{{"n", rep.dim()},
                {"dimension_vector", modrep::dimvector_to_json(alpha)},
                {"dimension_vector_text", alpha.to_text()},
                {"simple", modrep::is_simple(rep)}};
}

json run_codim(const std::string& alpha_text) {
    const DimVector alpha = DimVector::parse(alpha_text);
    const long long d = modrep::westbury_dim(alpha);
    const auto [codim, witness] = modrep::min_codim(alpha);
    return json{{"alpha", modrep::dimvector_to_json(alpha)},
                {"alpha_text", alpha.to_text()},
                {"n", alpha.total()},
                {"d", d},
                {"codim", codim},
                {"beta", modrep::dimvector_to_json(witness.beta)},
                {"beta_text", witness.beta.to_text()},
                {"gamma", modrep::dimvector_to_json(witness.gamma)},
                {"gamma_text", witness.gamma.to_text()}};
}

json run_mie_count(const std::string& alpha_text, const std::string& method) {
    const DimVector alpha = DimVector::parse(alpha_text);
    json result;
    if (method == "closed" || method == "all")
        result["closed"] = modrep::mie_count_closed(alpha);
    if (method == "enumerate" || method == "all")
        result["enumerate"] = modrep::mie_count_enumerate(alpha);
    if (method == "gf" || method == "all") result["gf"] = modrep::mie_count_gf(alpha);
    if (method == "all") {
        const long long c = result["closed"].get<long long>();
        if (c != result["enumerate"].get<long long>() || c != result["gf"].get<long long>())
            throw std::runtime_error("mie-count: the three methods disagree on " + alpha.to_text());
    }
    return result;
}

std::map<std::pair<int, int>, Cyclotomic> parse_involution_entries(
    const modrep::SignPattern& pattern, const std::string& text) {
    std::map<std::pair<int, int>, Cyclotomic> entries;
    for (const auto& pos : modrep::free_positions(pattern)) entries[pos] = Cyclotomic(0);

    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        if (item.empty()) continue;
        const auto eq = item.find('=');
        const auto comma = item.find(',');
        if (eq == std::string::npos || comma == std::string::npos || comma > eq)
            throw std::invalid_argument("involution: entries must look like 'i,j=value;...'");
        const int i = std::stoi(item.substr(0, comma)) - 1;  // 1-based on the command line
        const int j = std::stoi(item.substr(comma + 1, eq - comma - 1)) - 1;
        const auto it = entries.find({i, j});
        if (it == entries.end())
            throw std::invalid_argument("involution: position (" + std::to_string(i + 1) + "," +
                                        std::to_string(j + 1) + ") is not a free position");
        it->second = Cyclotomic::parse(item.substr(eq + 1));
    }
    return entries;
}

json run_involution(const std::string& pattern_text, const std::string& entries_text,
                    bool use_closed_form) {
    const modrep::SignPattern pattern = modrep::parse_sign_pattern(pattern_text);
    const auto entries = parse_involution_entries(pattern, entries_text);
    const Matrix y = use_closed_form ? modrep::involution_closed(pattern, entries)
                                     : modrep::involution_forward(pattern, entries);
    json positions = json::array();
    for (const auto& [i, j] : modrep::free_positions(pattern))
        positions.push_back(json::array({i + 1, j + 1}));
    return json{{"n", pattern.size()},
                {"pattern", modrep::sign_pattern_to_string(pattern)},
                {"free_dim", positions.size()},
                {"free_positions", std::move(positions)},
                {"Y", modrep::matrix_to_json(y)}};
}

json run_stabilizer(const std::string& multiplicities) {
    std::stringstream ss(multiplicities);
    std::vector<long long> parts;
    std::string tok;
    while (std::getline(ss, tok, ','))
        parts.push_back(std::stoll(tok));
    if (parts.size() != 3)
        throw std::invalid_argument("stabilizer: expected three multiplicities 'a1,a2,a3'");
    return json{{"multiplicities", json::array({parts[0], parts[1], parts[2]})},
                {"dim", modrep::stabilizer_dim(parts[0], parts[1], parts[2])}};
}

std::size_t default_series_order(const std::string& which) {
    if (const char* env = std::getenv("MODREP_SERIES_ORDER")) {
        const long v = std::atol(env);
        if (v < 1 || v > 100000)
            throw std::invalid_argument("MODREP_SERIES_ORDER must be in [1, 100000]");
        return static_cast<std::size_t>(v);
    }
    return which == "modular" ? 100 : 50;
}

json run_series(const std::string& which, long long order_arg, const std::string& alpha_text) {
    json result{{"which", which}};
    if (which == "mie") {
        if (alpha_text.empty())
            throw std::invalid_argument("series --which mie requires --alpha");
        const DimVector alpha = DimVector::parse(alpha_text);
        const modrep::Series g = modrep::mie_gf_poly(alpha);
        json coeffs = json::array();
        for (const auto& c : g.coefficients()) coeffs.push_back(rational_to_json(c));
        result["alpha"] = modrep::dimvector_to_json(alpha);
        result["coefficients"] = std::move(coeffs);
        result["m"] = alpha.b1;
        result["count"] = modrep::mie_count_gf(alpha);
        return result;
    }

    const std::size_t order =
        order_arg > 0 ? static_cast<std::size_t>(order_arg) : default_series_order(which);
    result["order"] = order;
    json rows = json::array();
    bool ok = true;
    if (which == "maxdim") {
        const modrep::Series s = modrep::max_simp_dim_series(order);
        for (std::size_t n = 1; n <= order; ++n) {
            const long long closed = modrep::max_simp_dim(static_cast<long long>(n));
            const bool match = s.coeff(n) == modrep::Rational(closed);
            ok = ok && match;
            rows.push_back(json{{"n", n},
                                {"closed", closed},
                                {"coefficient", rational_to_json(s.coeff(n))},
                                {"match", match}});
        }
    } else if (which == "modular") {
        const modrep::Series f = modrep::modular_forms_series(order);
        for (std::size_t n = 1; n <= order; ++n) {
            const long long codim = modrep::codim_sequence(static_cast<long long>(n));
            const bool match = f.coeff(n) == modrep::Rational(codim);
            ok = ok && match;
            rows.push_back(json{{"n", n},
                                {"codim", codim},
                                {"f", rational_to_json(f.coeff(n))},
                                {"match", match}});
        }
    } else {
        throw std::invalid_argument("series: --which must be maxdim, modular or mie");
    }
    result["rows"] = std::move(rows);
    result["ok"] = ok;
    return result;
}

// ------------------------------------------------------------- text output

std::string render_text(const std::string& command, const json& result) {
    std::ostringstream os;
    const auto plain = [&](std::initializer_list<const char*> keys) {
        bool first = true;
        for (const char* k : keys) {
            if (!result.contains(k)) continue;
            const json& v = result.at(k);
            os << (first ? "" : " ") << k << "="
               << (v.is_string() ? v.get<std::string>() : v.dump());
            first = false;
        }
        os << "\n";
    };
    if (command == "dim") plain({"alpha_text", "n", "theta", "d"});
    else if (command == "maxdim") plain({"n", "max_dim"});
    else if (command == "enumerate") {
        os << "n=" << result.at("n") << " count=" << result.at("count") << "\n";
        for (const auto& v : result.at("vectors"))
            os << modrep::dimvector_from_json(v).to_text() << "\n";
    } else if (command == "family" || command == "involution") {
        if (command == "involution")
            os << "pattern=" << result.at("pattern").get<std::string>()
               << " free_dim=" << result.at("free_dim") << "\n";
        for (const char* key : {"X", "Y"}) {
            if (!result.contains(key)) continue;
            os << key << ":\n" << render_matrix_text(modrep::matrix_from_json(result.at(key)));
        }
    } else if (command == "check-simple") plain({"n", "dimension_vector_text", "simple"});
    else if (command == "codim") plain({"alpha_text", "n", "d", "codim", "beta_text", "gamma_text"});
    else if (command == "mie-count") plain({"closed", "enumerate", "gf"});
    else if (command == "stabilizer") plain({"multiplicities", "dim"});
    else if (command == "series") {
        if (result.contains("rows")) {
            for (const auto& row : result.at("rows")) {
                for (auto it = row.begin(); it != row.end(); ++it)
                    os << it.key() << "=" << it.value().dump() << " ";
                os << "\n";
            }
            os << "ok=" << result.at("ok").dump() << "\n";
        } else {
            os << "alpha=" << modrep::dimvector_from_json(result.at("alpha")).to_text()
               << " count=" << result.at("count") << "\ncoefficients:";
            for (const auto& c : result.at("coefficients")) os << " " << c.dump();
            os << "\n";
        }
    } else os << result.dump() << "\n";
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations for modular group representations"};
    app.set_version_flag("--version", modrep::kVersion);
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--text", opt.text, "human-readable output instead of JSON");
    app.add_option("--out", opt.out_file, "write output to a file instead of stdout");

    std::string alpha_arg, source_arg, name_arg, pattern_arg, entries_arg;
    std::string which_arg, series_alpha_arg, mults_arg, method_arg = "all";
    std::vector<std::string> family_params;
    long long n_value = 0, order_arg = 0;
    bool closed_flag = false;

    auto* c_dim = app.add_subcommand("dim", "dimension of the variety of simples for alpha");
    c_dim->add_option("alpha", alpha_arg, "dimension vector (a1,a2,a3;b1,b2)")->required();

    auto* c_maxdim = app.add_subcommand("maxdim", "largest component dimension for total n");
    c_maxdim->add_option("n", n_value, "total dimension")->required();

    auto* c_enum = app.add_subcommand("enumerate", "all admissible dimension vectors of total n");
    c_enum->add_option("n", n_value, "total dimension")->required();

    auto* c_family = app.add_subcommand("family", "emit an explicit module family member");
    c_family->add_option("name", name_arg, "one | M | N | three")->required();
    c_family->add_option("params", family_params, "family parameters");

    auto* c_check = app.add_subcommand("check-simple", "relations, dimension vector, simplicity");
    c_check->add_option("source", source_arg, "JSON file, inline JSON or '-' for stdin")
        ->required();

    auto* c_codim = app.add_subcommand("codim", "minimal non-simple codimension with witness");
    c_codim->add_option("alpha", alpha_arg, "dimension vector (a1,a2,a3;b1,b2)")->required();

    auto* c_mie = app.add_subcommand("mie-count", "count maximally iterated extensions");
    c_mie->add_option("alpha", alpha_arg, "dimension vector (a1,a2,a3;b1,b2)")->required();
    c_mie->add_option("--method", method_arg, "closed | enumerate | gf | all (default all)")
        ->check(CLI::IsMember({"closed", "enumerate", "gf", "all"}));

    auto* c_inv = app.add_subcommand("involution", "upper triangular involution from a diagonal");
    c_inv->add_option("pattern", pattern_arg, "sign pattern, e.g. +-+ or +,-,+")->required();
    c_inv->add_option("entries", entries_arg, "free entries 'i,j=value;...' (1-based, default 0)");
    c_inv->add_flag("--closed", closed_flag, "use the chain-sum closed form");

    auto* c_stab = app.add_subcommand("stabilizer", "dimension of the diagonal stabilizer");
    c_stab->add_option("multiplicities", mults_arg, "eigenvalue multiplicities a1,a2,a3")
        ->required();

    auto* c_series = app.add_subcommand("series", "generating-function tables and identities");
    c_series->add_option("--which", which_arg, "maxdim | modular | mie")->required();
    c_series->add_option("--order", order_arg, "truncation order (default from MODREP_SERIES_ORDER)");
    c_series->add_option("--alpha", series_alpha_arg, "dimension vector for --which mie");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::string command;
    json inputs, result;
    try {
        if (c_dim->parsed()) {
            command = "dim";
            inputs = json{{"alpha", alpha_arg}};
            result = run_dim(alpha_arg);
        } else if (c_maxdim->parsed()) {
            command = "maxdim";
            inputs = json{{"n", n_value}};
            result = run_maxdim(n_value);
        } else if (c_enum->parsed()) {
            command = "enumerate";
            inputs = json{{"n", n_value}};
            result = run_enumerate(n_value);
        } else if (c_family->parsed()) {
            command = "family";
            inputs = json{{"name", name_arg}, {"params", family_params}};
            result = run_family(name_arg, family_params);
        } else if (c_check->parsed()) {
            command = "check-simple";
            inputs = json{{"source", source_arg == "-" ? "<stdin>" : source_arg}};
            result = run_check_simple(source_arg);
        } else if (c_codim->parsed()) {
            command = "codim";
            inputs = json{{"alpha", alpha_arg}};
            result = run_codim(alpha_arg);
        } else if (c_mie->parsed()) {
            command = "mie-count";
            inputs = json{{"alpha", alpha_arg}, {"method", method_arg}};
            result = run_mie_count(alpha_arg, method_arg);
        } else if (c_inv->parsed()) {
            command = "involution";
            inputs = json{{"pattern", pattern_arg}, {"entries", entries_arg},
                          {"closed", closed_flag}};
            result = run_involution(pattern_arg, entries_arg, closed_flag);
        } else if (c_stab->parsed()) {
            command = "stabilizer";
            inputs = json{{"multiplicities", mults_arg}};
            result = run_stabilizer(mults_arg);
        } else if (c_series->parsed()) {
            command = "series";
            inputs = json{{"which", which_arg}, {"order", order_arg}, {"alpha", series_alpha_arg}};
            result = run_series(which_arg, order_arg, series_alpha_arg);
        }

        const std::string payload =
            opt.text ? render_text(command, result) : envelope(command, inputs, result).dump() + "\n";
        emit(opt, payload);
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: value out of range: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
