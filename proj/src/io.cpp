#include "qpslab/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qps {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_matrix(std::ostream& os, const Operator& op) {
    os << op.dim() << ' ' << op.d() << ' ' << op.n() << '\n';
    for (int i = 0; i < op.dim(); ++i)
        for (int j = 0; j < op.dim(); ++j)
            os << i << ' ' << j << ' ' << fmt17(op.at(i, j).real()) << ' '
               << fmt17(op.at(i, j).imag()) << '\n';
}

Operator read_matrix(std::istream& is) {
    int dim = 0, d = 0, n = 0;
    if (!(is >> dim >> d >> n))
        throw std::runtime_error("read_matrix: bad header");
    Operator op(n, d);
    if (op.dim() != dim)
        throw std::runtime_error("read_matrix: header dim != d^n");
    for (int k = 0; k < dim * dim; ++k) {
        int i, j;
        double re, im;
        if (!(is >> i >> j >> re >> im))
            throw std::runtime_error("read_matrix: truncated entry list");
        if (i < 0 || i >= dim || j < 0 || j >= dim)
            throw std::runtime_error("read_matrix: entry index out of range");
        op.at(i, j) = cplx(re, im);
    }
    return op;
}

std::string char_table_csv(const CharTable& table) {
    std::ostringstream os;
    os << "p;q,re,im\n";
    for (std::size_t i = 0; i < table.size(); ++i) {
        const PhasePoint x = PhasePoint::from_index(table.d, table.n, i);
        os << x.str() << ',' << fmt17(table.values[i].real()) << ','
           << fmt17(table.values[i].imag()) << '\n';
    }
    return os.str();
}

std::string wigner_table_csv(const WignerTable& table) {
    std::ostringstream os;
    os << "p;q,w\n";
    for (std::size_t i = 0; i < table.size(); ++i) {
        const PhasePoint x = PhasePoint::from_index(table.d, table.n, i);
        os << x.str() << ',' << fmt17(table.values[i]) << '\n';
    }
    return os.str();
}

std::string stabilizer_group_json(const StabilizerGroup& group) {
    nlohmann::ordered_json j;
    j["d"] = group.support.d();
    j["n"] = group.support.n();
    j["generators"] = nlohmann::json::array();
    for (int k = 0; k < group.rank(); ++k) {
        nlohmann::ordered_json g;
        g["point"] = group.support.basis()[k].str();
        g["phase_re"] = group.phases[k].real();
        g["phase_im"] = group.phases[k].imag();
        j["generators"].push_back(g);
    }
    return j.dump(2) + "\n";
}

std::string trajectory_csv(const ConvTrajectory& traj) {
    std::ostringstream os;
    os << "L,entropy,ent_entropy,cond_entropy_alpha,trace_dist_to_mean,pauli_rank\n";
    for (std::size_t l = 0; l < traj.metrics.size(); ++l) {
        const auto& m = traj.metrics[l];
        os << l << ',' << fmt17(m.entropy) << ',' << fmt17(m.ent_entropy) << ','
           << fmt17(m.cond_entropy_alpha) << ',' << fmt17(m.trace_dist_to_mean)
           << ',' << m.pauli_rank << '\n';
    }
    return os.str();
}

std::string extremality_report_json(const ExtremalityReport& report) {
    nlohmann::ordered_json j;
    j["all_ok"] = report.all_ok;
    j["rows"] = nlohmann::json::array();
    for (const auto& row : report.rows) {
        nlohmann::ordered_json r;
        r["measure"] = row.measure;
        r["value_rho"] = row.value_rho;
        r["value_mean"] = row.value_mean;
        r["gap"] = row.gap;
        r["sign_ok"] = row.sign_ok;
        j["rows"].push_back(r);
    }
    return j.dump(2) + "\n";
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    os << content;
    if (!os) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

} // namespace qps
