#include "corack/io.hpp"
#include "corack/tangent.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

using namespace corack;

namespace {

struct CliError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Field parse_field(const std::string &s) {
    if (s == "Q")
        return Field::rationals();
    if (s.rfind("Fp:", 0) == 0) {
        try {
            return Field::prime(std::stoll(s.substr(3)));
        } catch (const std::exception &) {
            throw CliError("bad field spec \"" + s + "\"");
        }
    }
    throw CliError("bad field spec \"" + s + "\" (use Q or Fp:<p>)");
}

void emit(const Json &j, const std::string &out_path) {
    std::string text = j.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out)
        throw CliError("cannot write " + out_path);
    out << text;
}

FiniteGroup named_group(const std::string &name) {
    if (name.size() >= 2) {
        char kind = name[0];
        int n = 0;
        try {
            n = std::stoi(name.substr(1));
        } catch (const std::exception &) {
            throw CliError("unknown group \"" + name + "\"");
        }
        if (kind == 'c')
            return cyclic_group(n);
        if (kind == 'd')
            return dihedral_group(n);
        if (kind == 's')
            return symmetric_group(n);
    }
    throw CliError("unknown group \"" + name + "\" (use c<n>, d<n> or s<n>)");
}

CorackAlgebra build_conj(const std::string &group, int n, const Field &field,
                         bool allow_slow) {
    if (group == "gl" || group == "sl") {
        if (n >= 3 && !allow_slow)
            throw CliError("matrix size >= 3 requires --allow-slow");
        return conj_corack(stock_hopf(
            group == "gl" ? StockGroup::GL : StockGroup::SL, n, field));
    }
    if (group == "ga")
        return conj_corack(stock_hopf(StockGroup::Ga, 0, field));
    if (group == "gm")
        return conj_corack(stock_hopf(StockGroup::Gm, 0, field));
    if (group == "heis")
        return conj_corack(stock_hopf(StockGroup::Heis, 0, field));
    // anything else is a group JSON file
    return conj_corack(function_hopf(group_from_json(load_json(group)), field));
}

FiniteRack input_rack(const std::string &in, const std::string &conj_of) {
    if (!conj_of.empty())
        return conj_of_group(named_group(conj_of));
    if (in.empty())
        throw CliError("need --in <rack.json> or --conj-of <group>");
    return rack_from_json(load_json(in));
}

RackFilter parse_filter(const std::string &s) {
    if (s == "all")
        return RackFilter::all;
    if (s == "quandle")
        return RackFilter::quandle;
    if (s == "coassociative-dual")
        return RackFilter::coassociative_dual;
    if (s == "cocommutative-dual")
        return RackFilter::cocommutative_dual;
    throw CliError("unknown filter \"" + s + "\"");
}

int run(int argc, char **argv) {
    CLI::App app{"corack algebras, finite racks and their Leibniz algebras"};
    app.require_subcommand(1);

    std::string field_spec = "Q";
    std::string in_path, out_path, group = "gl", gens_spec, filter_spec = "all";
    std::string conj_of;
    int n = 1;
    bool allow_slow = false, cross_check_ad = false;

    auto add_common = [&](CLI::App *cmd) {
        cmd->add_option("--field", field_spec, "ground field: Q or Fp:<p>");
        cmd->add_option("--in", in_path, "input JSON path");
        cmd->add_option("--out", out_path, "output path (default stdout)");
        cmd->add_flag("--allow-slow", allow_slow,
                      "permit size-3 matrix groups and other slow checks");
    };

    auto *gen = app.add_subcommand("gen", "emit a corack algebra as JSON");
    gen->require_subcommand(1);
    auto *gen_trivial = gen->add_subcommand("trivial", "nabla f = 1 (x) f");
    gen_trivial->add_option("--gens", gens_spec, "comma-separated generators")
        ->required();
    add_common(gen_trivial);
    auto *gen_conj = gen->add_subcommand("conj", "conjugation corack");
    gen_conj->add_option("--group", group,
                         "gl|sl|ga|gm|heis or a group JSON file");
    gen_conj->add_option("--n", n, "matrix size for gl/sl");
    add_common(gen_conj);
    auto *gen_ol = gen->add_subcommand("ol", "GL_n acting on affine n-space");
    gen_ol->add_option("--n", n, "matrix size")->required();
    add_common(gen_ol);
    auto *gen_fd = gen->add_subcommand("finite-dual",
                                       "function algebra of a finite rack");
    gen_fd->add_option("--conj-of", conj_of, "use Conj of c<n>/d<n>/s<n>");
    add_common(gen_fd);

    auto *check = app.add_subcommand("check", "corack axioms and predicates");
    add_common(check);

    auto *leibniz =
        app.add_subcommand("leibniz", "structure constants of the bracket");
    leibniz->add_flag("--cross-check-ad", cross_check_ad,
                      "also compare the dual-number adjoint on all pairs");
    add_common(leibniz);

    auto *classify =
        app.add_subcommand("classify", "analyze a Leibniz algebra JSON");
    add_common(classify);

    auto *finite = app.add_subcommand("finite", "finite rack utilities");
    finite->require_subcommand(1);
    auto *f_check = finite->add_subcommand("check", "rack axioms");
    auto *f_center = finite->add_subcommand("center", "central elements");
    auto *f_ideals =
        finite->add_subcommand("ideals", "classify unit-containing subsets");
    auto *f_enum = finite->add_subcommand("enumerate", "all racks of size n");
    f_enum->add_option("--n", n, "rack size (<= 4)")->required();
    f_enum->add_option("--filter", filter_spec,
                       "all|quandle|coassociative-dual|cocommutative-dual");
    auto *f_dual =
        finite->add_subcommand("dualize", "function-algebra corack of a rack");
    for (auto *cmd : {f_check, f_center, f_ideals, f_enum, f_dual}) {
        cmd->add_option("--conj-of", conj_of, "use Conj of c<n>/d<n>/s<n>");
        add_common(cmd);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Field field = parse_field(field_spec);

    if (gen_trivial->parsed()) {
        VarList names;
        std::string cur;
        for (char ch : gens_spec + ",") {
            if (ch == ',') {
                if (!cur.empty())
                    names.push_back(cur);
                cur.clear();
            } else {
                cur += ch;
            }
        }
        if (names.empty())
            throw CliError("--gens needs at least one name");
        std::vector<FieldElem> eps(names.size(), FieldElem::zero(field));
        auto A = Presentation::make(field, std::move(names), {}, std::nullopt,
                                    std::move(eps));
        emit(corack_to_json(trivial_corack(A)), out_path);
        return 0;
    }
    if (gen_conj->parsed()) {
        emit(corack_to_json(build_conj(group, n, field, allow_slow)),
             out_path);
        return 0;
    }
    if (gen_ol->parsed()) {
        if (n >= 3 && !allow_slow)
            throw CliError("--n >= 3 requires --allow-slow");
        emit(corack_to_json(ol_corack(n, field)), out_path);
        return 0;
    }
    if (gen_fd->parsed()) {
        emit(corack_to_json(dual_corack(input_rack(in_path, conj_of), field)),
             out_path);
        return 0;
    }

    if (check->parsed()) {
        if (in_path.empty())
            throw CliError("check needs --in <corack.json>");
        auto C = corack_from_json(load_json(in_path));
        auto rep = corack_check(C);
        auto pred = corack_predicates(C);
        Json j;
        j["axioms"] = report_to_json(rep);
        Json p;
        p["quandle"] = pred.quandle;
        p["involutory"] =
            pred.involutory ? Json(*pred.involutory) : Json(nullptr);
        p["cocommutative"] = pred.cocommutative;
        p["coassociative"] = pred.coassociative;
        j["predicates"] = std::move(p);
        emit(j, out_path);
        return rep.all_pass() ? 0 : 1;
    }

    if (leibniz->parsed()) {
        if (in_path.empty())
            throw CliError("leibniz needs --in <corack.json>");
        auto C = corack_from_json(load_json(in_path));
        auto g = structure_constants(C);
        if (cross_check_ad) {
            auto B = derivation_basis(C);
            for (const auto &D : B)
                for (const auto &E : B)
                    if (ad_via_dual(C, D, E).values !=
                        bracket(C, D, E).values) {
                        std::cerr << "adjoint cross-check failed\n";
                        return 1;
                    }
        }
        emit(leibniz_to_json(g), out_path);
        return 0;
    }

    if (classify->parsed()) {
        if (in_path.empty())
            throw CliError("classify needs --in <leibniz.json>");
        auto g = leibniz_from_json(load_json(in_path));
        auto rep = check_identities(g);
        auto Z = left_center(g);
        Json j;
        j["dim"] = g.dim;
        j["leibniz"] = rep.leibniz;
        j["lie"] = rep.lie;
        j["abelian"] = rep.abelian;
        j["left_center_dim"] = Z.rows.size();
        Json zb = Json::array();
        for (const auto &row : Z.rows) {
            Json r = Json::array();
            for (const auto &x : row)
                r.push_back(x.to_string());
            zb.push_back(std::move(r));
        }
        j["left_center_basis"] = std::move(zb);
        emit(j, out_path);
        return 0;
    }

    if (f_check->parsed()) {
        auto rep = rack_axioms_check(input_rack(in_path, conj_of));
        Json j;
        j["axioms"] = report_to_json(rep.axioms);
        j["involutory"] = rep.involutory;
        j["quandle"] = rep.quandle;
        emit(j, out_path);
        return rep.all_pass() ? 0 : 1;
    }
    if (f_center->parsed()) {
        Json j;
        j["center"] = center(input_rack(in_path, conj_of));
        emit(j, out_path);
        return 0;
    }
    if (f_ideals->parsed()) {
        auto R = input_rack(in_path, conj_of);
        if (R.size > 10)
            throw CliError("subset scan limited to size <= 10");
        Json subsets = Json::array();
        for (int mask = 0; mask < (1 << R.size); ++mask) {
            if (!(mask & (1 << R.unit)))
                continue;
            std::vector<int> S;
            for (int x = 0; x < R.size; ++x)
                if (mask & (1 << x))
                    S.push_back(x);
            auto cls = subset_classify(R, S);
            Json e;
            e["subset"] = S;
            e["class"] = cls == SubsetClass::left_ideal ? "left-ideal"
                         : cls == SubsetClass::subrack  ? "subrack"
                                                        : "none";
            subsets.push_back(std::move(e));
        }
        Json j;
        j["subsets"] = std::move(subsets);
        emit(j, out_path);
        return 0;
    }
    if (f_enum->parsed()) {
        auto racks = enumerate_racks(n, parse_filter(filter_spec));
        Json list = Json::array();
        for (const auto &R : racks)
            list.push_back(rack_to_json(R));
        Json j;
        j["count"] = racks.size();
        j["racks"] = std::move(list);
        emit(j, out_path);
        return 0;
    }
    if (f_dual->parsed()) {
        emit(corack_to_json(
                 dual_corack(input_rack(in_path, conj_of), field)),
             out_path);
        return 0;
    }

    return 2;
}

} // namespace

int main(int argc, char **argv) {
    try {
        return run(argc, argv);
    } catch (const CliError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const IoError &e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
