// Command-line front end over the MMCPD toolkit: verification, signature
// reports, ALS search, transformation, composition, sparsification, and
// bundled generators.  Exit codes: 0 success / goal met, 1 valid run but goal
// unmet (nonzero residual, tolerance unreached), 2 usage or parse errors.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mmt/als.hpp"
#include "mmt/sparsify.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

using nlohmann::json;
using namespace mmt;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string fnv1a64_hex(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

json base_json(const std::string& input_bytes) {
    return json{{"version", kVersion}, {"input_hash", fnv1a64_hex(input_bytes)}};
}

std::vector<double> parse_double_list(const std::string& text, const std::string& flag) {
    std::vector<double> vals;
    std::string item;
    std::istringstream ss(text);
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            vals.push_back(std::stod(item, &pos));
            while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw CLI::ValidationError(flag, "not a comma-separated number list: " + text);
        }
    }
    if (vals.empty()) throw CLI::ValidationError(flag, "empty list");
    return vals;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

template <class T>
std::string scalar_str(const T& v) {
    if constexpr (std::is_same_v<T, Rat>)
        return rat_to_string(v);
    else {
        std::ostringstream ss;
        ss.precision(17);
        ss << v;
        return ss.str();
    }
}

template <class T>
std::vector<std::string> scalar_strs(const std::vector<T>& v) {
    std::vector<std::string> out;
    for (const T& x : v) out.push_back(scalar_str(x));
    return out;
}

// ---- transform files (MMGT/1): header, dims line, then XA (QxQ), XB (SxS),
// XC (PxP) as whitespace-separated rational rows.  Same comment rules as MMCPD.

void save_transform(const RatGroote& gt, const Dims& d, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path);
    out << "MMGT 1\n" << d.P << " " << d.Q << " " << d.S << "\n";
    const auto dump = [&](const RatMat& m) {
        for (int i = 0; i < m.rows(); ++i) {
            for (int j = 0; j < m.cols(); ++j) out << (j ? " " : "") << rat_to_string(m(i, j));
            out << "\n";
        }
    };
    dump(gt.XA);
    dump(gt.XB);
    dump(gt.XC);
    if (!out) throw std::runtime_error("write failed: " + path);
}

RatGroote load_transform(const std::string& path, const Dims& expected) {
    std::ifstream in(path);
    if (!in) throw detail::FormatError("cannot open file: " + path);
    detail::LineReader reader(in);
    std::string line;
    const auto need = [&](const char* what) {
        if (!reader.next(line)) detail::fail(reader.lineno(), std::string("missing ") + what);
        return line;
    };
    if (need("transform header") != "MMGT 1")
        detail::fail(reader.lineno(), "expected header 'MMGT 1'");
    std::istringstream dl(need("dims line"));
    Dims d{};
    if (!(dl >> d.P >> d.Q >> d.S)) detail::fail(reader.lineno(), "dims line must hold three integers");
    if (d.P != expected.P || d.Q != expected.Q || d.S != expected.S)
        detail::fail(reader.lineno(), "transform dims do not match the factorization");
    const auto read_mat = [&](int n, const char* name) {
        RatMat m(n, n);
        for (int i = 0; i < n; ++i) {
            std::istringstream row(need(name));
            for (int j = 0; j < n; ++j) {
                std::string tok;
                if (!(row >> tok))
                    detail::fail(reader.lineno(), std::string(name) + ": expected " +
                                                      std::to_string(n) + " entries per row");
                try {
                    m(i, j) = rat_from_string(tok);
                } catch (const std::exception& e) {
                    detail::fail(reader.lineno(), std::string(name) + ": " + e.what());
                }
            }
            std::string extra;
            if (row >> extra)
                detail::fail(reader.lineno(), std::string(name) + ": trailing data '" + extra + "'");
        }
        return m;
    };
    RatGroote gt;
    gt.XA = read_mat(d.Q, "X_A row");
    gt.XB = read_mat(d.S, "X_B row");
    gt.XC = read_mat(d.P, "X_C row");
    if (reader.next(line)) detail::fail(reader.lineno(), "trailing data after transform");
    return gt;
}

// Writes f and confirms the written file parses back to exactly f.
void write_verified(const RatFact& f, const std::string& path) {
    save(f, path);
    if (!(load_rational(path) == f))
        throw std::runtime_error("internal error: written file did not round-trip: " + path);
}

std::string default_output(const std::string& input, const std::string& suffix) {
    std::filesystem::path p(input);
    return (p.parent_path() / (p.stem().string() + suffix + ".mmcpd")).string();
}

// ---- subcommand state ----

struct VerifyArgs {
    std::string path;
    bool as_float = false;
    double tol = 1e-8;
    bool json_out = false;
};

struct SignatureArgs : VerifyArgs {
    bool generalized = false;
    bool rank = false;
    bool sorted = false;
};

struct AlsArgs {
    int P = 0, Q = 0, S = 0, R = 0;
    AlsOptions opts;
    std::string signature_list, weight_list, warm_start, output, trace;
    bool json_out = false;
};

struct TransformArgs {
    std::string path, transform_file, output, save_transform_path;
    std::uint64_t seed = 0;
    bool have_seed = false;
    long range = 3;
    bool json_out = false;
};

struct TwoFileArgs {
    std::string path1, path2, output;
    bool json_out = false;
};

struct SparsifyArgs {
    std::string path, output, save_transform_path;
    bool json_out = false;
};

struct GenArgs {
    std::string name, output;
    std::vector<std::string> params;
    bool json_out = false;
};

json verify_json(const RatFact& f, const Rat& residual, const std::string& bytes) {
    auto [lhs, rhs] = trace_identities(f);
    json j = base_json(bytes);
    j["dims"] = {f.dims.P, f.dims.Q, f.dims.S};
    j["rank"] = f.rank();
    j["residual"] = rat_to_string(residual);
    j["trace_FtC"] = rat_to_string(lhs);
    j["trace_CGCt"] = rat_to_string(rhs);
    j["valid"] = residual == 0;
    return j;
}

int cmd_verify(const VerifyArgs& a) {
    const std::string bytes = read_file(a.path);
    const RatFact f = parse_mmcpd(bytes);
    bool ok;
    if (a.as_float) {
        const RealFact rf = to_real(f);
        const double residual = brent_residual(rf);
        const auto [lhs, rhs] = trace_identities(rf);
        ok = residual < a.tol;
        if (a.json_out) {
            json j = base_json(bytes);
            j["dims"] = {f.dims.P, f.dims.Q, f.dims.S};
            j["rank"] = f.rank();
            j["residual"] = residual;
            j["trace_FtC"] = lhs;
            j["trace_CGCt"] = rhs;
            j["valid"] = ok;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "dims " << f.dims.P << "x" << f.dims.Q << "x" << f.dims.S << "  rank "
                      << f.rank() << "\n"
                      << "residual " << residual << " (float, tol " << a.tol << ")\n"
                      << "trace identities: tr(F'C) = " << lhs << ", tr(CGC') = " << rhs
                      << ", PQS = " << f.dims.P * f.dims.Q * f.dims.S << "\n"
                      << (ok ? "VALID" : "INVALID") << "\n";
        }
    } else {
        const Rat residual = brent_residual(f);
        ok = residual == 0;
        if (a.json_out) {
            std::cout << verify_json(f, residual, bytes).dump(2) << "\n";
        } else {
            const auto [lhs, rhs] = trace_identities(f);
            std::cout << "dims " << f.dims.P << "x" << f.dims.Q << "x" << f.dims.S << "  rank "
                      << f.rank() << "\n"
                      << "residual " << rat_to_string(residual) << " (exact)\n"
                      << "trace identities: tr(F'C) = " << rat_to_string(lhs) << ", tr(CGC') = "
                      << rat_to_string(rhs) << ", PQS = " << f.dims.P * f.dims.Q * f.dims.S << "\n"
                      << (ok ? "VALID" : "INVALID") << "\n";
        }
    }
    return ok ? 0 : 1;
}

int cmd_signature(const SignatureArgs& a) {
    const std::string bytes = read_file(a.path);
    const RatFact f = parse_mmcpd(bytes);
    json j = base_json(bytes);
    j["dims"] = {f.dims.P, f.dims.Q, f.dims.S};
    j["rank"] = f.rank();
    std::ostringstream text;
    if (a.as_float) {
        const RealFact rf = to_real(f);
        const RealVec s = signature(rf);
        std::vector<double> sv(s.data(), s.data() + s.size());
        if (a.sorted) sv = sorted_desc(s);
        text << join(scalar_strs(sv), " ") << "\n";
        j["signature"] = sv;
        if (a.generalized) {
            const RealMat gen = generalized_signature(rf);
            j["generalized"] = json::array();
            for (int r = 0; r < gen.rows(); ++r) {
                std::vector<double> row(gen.cols());
                for (int c = 0; c < gen.cols(); ++c) row[c] = gen(r, c);
                j["generalized"].push_back(row);
                text << "gen[" << r + 1 << "]: " << join(scalar_strs(row), " ") << "\n";
            }
        }
        if (a.rank) {
            RankSignature rs = rank_signature(rf, a.tol);
            if (a.sorted) {
                rs.sA = sorted_desc(rs.sA);
                rs.sB = sorted_desc(rs.sB);
                rs.sC = sorted_desc(rs.sC);
            }
            j["rank_signature"] = {{"sA", rs.sA}, {"sB", rs.sB}, {"sC", rs.sC}};
            for (auto [nm, v] : {std::pair{"sA", &rs.sA}, std::pair{"sB", &rs.sB},
                                 std::pair{"sC", &rs.sC}}) {
                text << nm << ":";
                for (int x : *v) text << " " << x;
                text << "\n";
            }
        }
    } else {
        const RatVec s = signature(f);
        std::vector<Rat> sv(s.data(), s.data() + s.size());
        if (a.sorted) sv = sorted_desc(s);
        text << join(scalar_strs(sv), " ") << "\n";
        j["signature"] = scalar_strs(sv);
        if (a.generalized) {
            const RatMat gen = generalized_signature(f);
            j["generalized"] = json::array();
            for (int r = 0; r < gen.rows(); ++r) {
                std::vector<Rat> row(gen.cols());
                for (int c = 0; c < gen.cols(); ++c) row[c] = gen(r, c);
                j["generalized"].push_back(scalar_strs(row));
                text << "gen[" << r + 1 << "]: " << join(scalar_strs(row), " ") << "\n";
            }
        }
        if (a.rank) {
            RankSignature rs = rank_signature(f);
            if (a.sorted) {
                rs.sA = sorted_desc(rs.sA);
                rs.sB = sorted_desc(rs.sB);
                rs.sC = sorted_desc(rs.sC);
            }
            j["rank_signature"] = {{"sA", rs.sA}, {"sB", rs.sB}, {"sC", rs.sC}};
            for (auto [nm, v] : {std::pair{"sA", &rs.sA}, std::pair{"sB", &rs.sB},
                                 std::pair{"sC", &rs.sC}}) {
                text << nm << ":";
                for (int x : *v) text << " " << x;
                text << "\n";
            }
        }
    }
    if (a.json_out)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text.str();
    return 0;
}

int cmd_als(AlsArgs a) {
    const Dims d{a.P, a.Q, a.S};
    std::optional<SignatureTarget> target;
    if (!a.signature_list.empty()) {
        SignatureTarget t;
        const auto s0 = parse_double_list(a.signature_list, "--signature");
        if (static_cast<int>(s0.size()) != a.R)
            throw CLI::ValidationError("--signature", "needs exactly R values");
        t.s0 = RealVec::Map(s0.data(), s0.size());
        if (a.weight_list.empty()) {
            t.w = RealVec::Constant(a.R, 1.0);
        } else {
            const auto w = parse_double_list(a.weight_list, "--weights");
            if (static_cast<int>(w.size()) != a.R)
                throw CLI::ValidationError("--weights", "needs exactly R values");
            t.w = RealVec::Map(w.data(), w.size());
        }
        target = t;
    } else if (!a.weight_list.empty()) {
        throw CLI::ValidationError("--weights", "requires --signature");
    }
    std::optional<RealFact> warm;
    if (!a.warm_start.empty()) {
        warm = load_real(a.warm_start);
        if (warm->dims.P != d.P || warm->dims.Q != d.Q || warm->dims.S != d.S ||
            warm->rank() != a.R)
            throw CLI::ValidationError("--warm-start", "file dims/rank do not match P Q S R");
    }
    if (a.output.empty())
        a.output = "als_" + std::to_string(a.P) + "x" + std::to_string(a.Q) + "x" +
                   std::to_string(a.S) + "_r" + std::to_string(a.R) + ".mmcpd";
    if (a.trace.empty())
        a.trace = std::filesystem::path(a.output).replace_extension(".csv").string();

    const AlsTrace tr = target
                            ? run_signature_als(d, a.R, *target, a.opts, warm ? &*warm : nullptr)
                            : run_als(d, a.R, a.opts, warm ? &*warm : nullptr);

    {
        std::ofstream csv(a.trace);
        if (!csv) throw std::runtime_error("cannot open file for writing: " + a.trace);
        csv << "iter,cost\n";
        csv.precision(17);
        for (std::size_t i = 0; i < tr.costs.size(); ++i) csv << i + 1 << "," << tr.costs[i] << "\n";
    }
    const double final_cost = tr.costs.empty() ? std::numeric_limits<double>::quiet_NaN()
                                               : tr.costs.back();
    bool wrote = false;
    if (tr.converged) {
        // saved as exact dyadic rationals, so the reloaded residual is the
        // float factorization's true residual
        write_verified(to_rational(tr.fact), a.output);
        wrote = true;
    }
    if (a.json_out) {
        std::ostringstream key;
        key << a.P << "," << a.Q << "," << a.S << "," << a.R << ",seed=" << a.opts.seed
            << ",restarts=" << a.opts.restarts;
        json j = base_json(key.str());
        j["dims"] = {a.P, a.Q, a.S};
        j["rank"] = a.R;
        j["converged"] = tr.converged;
        j["final_cost"] = final_cost;
        j["iterations"] = tr.costs.size();
        j["best_restart"] = tr.best_restart;
        j["diverged_restarts"] = tr.diverged_restarts;
        j["trace_file"] = a.trace;
        j["output_file"] = wrote ? json(a.output) : json(nullptr);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "best restart " << tr.best_restart << ": final cost " << final_cost << " after "
                  << tr.costs.size() << " iterations (" << tr.diverged_restarts << " of "
                  << a.opts.restarts << " restarts diverged)\n"
                  << "trace written to " << a.trace << "\n";
        if (wrote)
            std::cout << "factorization written to " << a.output << "\n";
        else
            std::cout << "tolerance " << a.opts.tol << " not reached; no factorization written\n";
    }
    return tr.converged ? 0 : 1;
}

int cmd_transform(const TransformArgs& a) {
    if (a.have_seed == !a.transform_file.empty())
        throw CLI::ValidationError("transform", "give exactly one of --random-seed and --transform-file");
    const std::string bytes = read_file(a.path);
    const RatFact f = parse_mmcpd(bytes);
    const RatGroote gt = a.have_seed ? random_groote(f.dims, a.seed, a.range)
                                     : load_transform(a.transform_file, f.dims);
    const Rat before = brent_residual(f);
    const RatFact out = apply_groote(f, gt);
    const Rat after = brent_residual(out);
    if (after != before)
        throw std::runtime_error("internal error: transform changed the residual");
    const std::string out_path = a.output.empty() ? default_output(a.path, "_t") : a.output;
    write_verified(out, out_path);
    if (!a.save_transform_path.empty()) save_transform(gt, f.dims, a.save_transform_path);
    if (a.json_out) {
        json j = base_json(bytes);
        j["dims"] = {f.dims.P, f.dims.Q, f.dims.S};
        j["rank"] = f.rank();
        j["residual"] = rat_to_string(after);
        j["output_file"] = out_path;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "residual preserved at " << rat_to_string(after) << "; written to " << out_path
                  << "\n";
    }
    return 0;
}

int cmd_compose(const TwoFileArgs& a) {
    const std::string bytes1 = read_file(a.path1), bytes2 = read_file(a.path2);
    const RatFact f1 = parse_mmcpd(bytes1), f2 = parse_mmcpd(bytes2);
    const RatFact out = compose_kronecker(f1, f2);
    const Rat residual = brent_residual(out);
    const std::string out_path = a.output.empty() ? "composed.mmcpd" : a.output;
    if (residual != 0) {
        std::cerr << "composed residual " << rat_to_string(residual)
                  << " is nonzero (inputs not both valid); nothing written\n";
        return 1;
    }
    write_verified(out, out_path);
    if (a.json_out) {
        json j = base_json(bytes1 + bytes2);
        j["dims"] = {out.dims.P, out.dims.Q, out.dims.S};
        j["rank"] = out.rank();
        j["residual"] = rat_to_string(residual);
        j["output_file"] = out_path;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "composed dims " << out.dims.P << "x" << out.dims.Q << "x" << out.dims.S
                  << " rank " << out.rank() << " residual " << rat_to_string(residual)
                  << "; written to " << out_path << "\n";
    }
    return 0;
}

int cmd_sparsify(const SparsifyArgs& a) {
    const std::string bytes = read_file(a.path);
    const RatFact f = parse_mmcpd(bytes);
    const Rat before_res = brent_residual(f);
    const SparsifyResult res = sparsify(f);
    if (brent_residual(res.fact) != before_res)
        throw std::runtime_error("internal error: sparsify changed the residual");
    const std::string out_path = a.output.empty() ? default_output(a.path, "_sparse") : a.output;
    write_verified(res.fact, out_path);
    if (!a.save_transform_path.empty()) save_transform(res.transform, f.dims, a.save_transform_path);
    if (a.json_out) {
        json j = base_json(bytes);
        j["dims"] = {f.dims.P, f.dims.Q, f.dims.S};
        j["rank"] = f.rank();
        j["nnz_before"] = {res.before.A, res.before.B, res.before.C};
        j["nnz_after"] = {res.after.A, res.after.B, res.after.C};
        j["improved"] = res.improved;
        if (!res.diagnostic.empty()) j["diagnostic"] = res.diagnostic;
        j["output_file"] = out_path;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "nnz before (" << res.before.A << "," << res.before.B << "," << res.before.C
                  << ") after (" << res.after.A << "," << res.after.B << "," << res.after.C
                  << "); written to " << out_path << "\n";
        if (!res.diagnostic.empty()) std::cout << res.diagnostic << "\n";
    }
    return 0;
}

int cmd_gen(const GenArgs& a) {
    std::vector<Rat> params;
    for (const std::string& p : a.params) params.push_back(rat_from_string(p));
    const RatFact f = generator(a.name, params);
    const Rat residual = brent_residual(f);
    if (residual != 0)
        throw std::runtime_error("internal error: generator produced nonzero residual");
    const std::string out_path = a.output.empty() ? a.name + ".mmcpd" : a.output;
    write_verified(f, out_path);
    if (a.json_out) {
        json j = base_json(a.name + " " + join(a.params, " "));
        j["dims"] = {f.dims.P, f.dims.Q, f.dims.S};
        j["rank"] = f.rank();
        j["residual"] = rat_to_string(residual);
        j["output_file"] = out_path;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "generated " << a.name << ": dims " << f.dims.P << "x" << f.dims.Q << "x"
                  << f.dims.S << " rank " << f.rank() << " residual 0; written to " << out_path
                  << "\n";
    }
    return 0;
}

int cmd_report(const VerifyArgs& a) {
    const std::string bytes = read_file(a.path);
    const RatFact f = parse_mmcpd(bytes);
    const Rat residual = brent_residual(f);
    const SignatureReport rep = signature_report(f);
    const NnzReport nz = nnz_report(f);
    if (a.json_out) {
        json j = verify_json(f, residual, bytes);
        j["signature"] = scalar_strs(rep.s);
        j["signature_sorted"] = scalar_strs(rep.s_sorted);
        j["generalized"] = json::array();
        for (const auto& row : rep.generalized) j["generalized"].push_back(scalar_strs(row));
        j["rank_signature"] = {{"sA", rep.rank_sig.sA}, {"sB", rep.rank_sig.sB},
                               {"sC", rep.rank_sig.sC}};
        j["nnz"] = {nz.A, nz.B, nz.C};
        std::cout << j.dump(2) << "\n";
    } else {
        const auto [lhs, rhs] = trace_identities(f);
        std::cout << "dims " << f.dims.P << "x" << f.dims.Q << "x" << f.dims.S << "  rank "
                  << f.rank() << "\n"
                  << "residual " << rat_to_string(residual) << " (exact)  ["
                  << (residual == 0 ? "VALID" : "INVALID") << "]\n"
                  << "trace identities: tr(F'C) = " << rat_to_string(lhs) << ", tr(CGC') = "
                  << rat_to_string(rhs) << "\n"
                  << "signature: " << join(scalar_strs(rep.s), " ") << "\n"
                  << "signature sorted: " << join(scalar_strs(rep.s_sorted), " ") << "\n";
        std::cout << "rank signature sA:";
        for (int x : rep.rank_sig.sA) std::cout << " " << x;
        std::cout << "\nrank signature sB:";
        for (int x : rep.rank_sig.sB) std::cout << " " << x;
        std::cout << "\nrank signature sC:";
        for (int x : rep.rank_sig.sC) std::cout << " " << x;
        std::cout << "\nnnz (" << nz.A << "," << nz.B << "," << nz.C << ")\n";
    }
    return residual == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Matrix-multiplication tensor CP decomposition toolkit"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    VerifyArgs va;
    CLI::App* verify = app.add_subcommand("verify", "Check a decomposition against its tensor");
    verify->add_option("file", va.path, "MMCPD input")->required();
    verify->add_flag("--float", va.as_float, "evaluate in double precision");
    verify->add_option("--tol", va.tol, "float validity tolerance")->capture_default_str();
    verify->add_flag("--json", va.json_out, "machine-readable output");

    SignatureArgs sa;
    CLI::App* sig = app.add_subcommand("signature", "Print signature invariants");
    sig->add_option("file", sa.path, "MMCPD input")->required();
    sig->add_flag("--generalized", sa.generalized, "include generalized signature rows");
    sig->add_flag("--rank", sa.rank, "include rank signatures");
    sig->add_flag("--sorted", sa.sorted, "sort each signature non-increasingly");
    sig->add_flag("--float", sa.as_float, "evaluate in double precision");
    sig->add_option("--tol", sa.tol, "float rank tolerance")->capture_default_str();
    sig->add_flag("--json", sa.json_out, "machine-readable output");

    AlsArgs aa;
    CLI::App* als = app.add_subcommand("als", "Alternating least squares search");
    als->add_option("P", aa.P, "rows of X")->required()->check(CLI::PositiveNumber);
    als->add_option("Q", aa.Q, "cols of X / rows of Y")->required()->check(CLI::PositiveNumber);
    als->add_option("S", aa.S, "cols of Y")->required()->check(CLI::PositiveNumber);
    als->add_option("R", aa.R, "decomposition rank")->required()->check(CLI::PositiveNumber);
    als->add_option("--iters", aa.opts.max_iters, "iteration cap per restart")
        ->capture_default_str()->check(CLI::PositiveNumber);
    als->add_option("--tol", aa.opts.tol, "stop when cost drops below this")->capture_default_str();
    als->add_option("--restarts", aa.opts.restarts, "independent random restarts")
        ->capture_default_str()->check(CLI::PositiveNumber);
    als->add_option("--seed", aa.opts.seed, "RNG seed")->capture_default_str();
    als->add_option("--lambda", aa.opts.lambda, "ridge parameter; negative = automatic")
        ->capture_default_str();
    als->add_option("--init-scale", aa.opts.init_scale, "uniform init half-width")
        ->capture_default_str();
    als->add_option("--threads", aa.opts.threads, "parallel restart workers")
        ->capture_default_str()->check(CLI::PositiveNumber);
    als->add_option("--signature", aa.signature_list, "target signature, comma-separated R values");
    als->add_option("--weights", aa.weight_list, "signature penalty weights, comma-separated");
    als->add_option("--warm-start", aa.warm_start, "MMCPD file to start from");
    als->add_option("-o,--output", aa.output, "output MMCPD path");
    als->add_option("--trace", aa.trace, "cost trace CSV path");
    als->add_flag("--json", aa.json_out, "machine-readable output");

    TransformArgs ta;
    CLI::App* tr = app.add_subcommand("transform", "Apply an equivalence transform");
    tr->add_option("file", ta.path, "MMCPD input")->required();
    tr->add_option("--random-seed", ta.seed, "draw a random invertible transform");
    tr->add_option("--transform-file", ta.transform_file, "MMGT/1 transform file");
    tr->add_option("--range", ta.range, "random transform entry range")->capture_default_str();
    tr->add_option("-o,--output", ta.output, "output MMCPD path");
    tr->add_option("--save-transform", ta.save_transform_path, "write the transform as MMGT/1");
    tr->add_flag("--json", ta.json_out, "machine-readable output");

    TwoFileArgs ca;
    CLI::App* comp = app.add_subcommand("compose", "Kronecker-compose two decompositions");
    comp->add_option("file1", ca.path1, "outer MMCPD input")->required();
    comp->add_option("file2", ca.path2, "inner MMCPD input")->required();
    comp->add_option("-o,--output", ca.output, "output MMCPD path");
    comp->add_flag("--json", ca.json_out, "machine-readable output");

    SparsifyArgs pa;
    CLI::App* sp = app.add_subcommand("sparsify", "Search the transform orbit for fewer nonzeros");
    sp->add_option("file", pa.path, "MMCPD input")->required();
    sp->add_option("-o,--output", pa.output, "output MMCPD path");
    sp->add_option("--save-transform", pa.save_transform_path, "write the transform as MMGT/1");
    sp->add_flag("--json", pa.json_out, "machine-readable output");

    GenArgs ga;
    CLI::App* gen = app.add_subcommand("gen", "Emit a bundled or parameterized decomposition");
    gen->add_option("name", ga.name, "one of: " + join(generator_names(), ", "))->required();
    gen->add_option("params", ga.params, "generator parameters (rationals)");
    gen->add_option("-o,--output", ga.output, "output MMCPD path");
    gen->add_flag("--json", ga.json_out, "machine-readable output");

    VerifyArgs ra;
    CLI::App* rep = app.add_subcommand("report", "Verification + signatures + nnz in one view");
    rep->add_option("file", ra.path, "MMCPD input")->required();
    rep->add_flag("--json", ra.json_out, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }
    ta.have_seed = tr->count("--random-seed") > 0;

    try {
        if (*verify) return cmd_verify(va);
        if (*sig) return cmd_signature(sa);
        if (*als) return cmd_als(aa);
        if (*tr) return cmd_transform(ta);
        if (*comp) return cmd_compose(ca);
        if (*sp) return cmd_sparsify(pa);
        if (*gen) return cmd_gen(ga);
        if (*rep) return cmd_report(ra);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const detail::FormatError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
