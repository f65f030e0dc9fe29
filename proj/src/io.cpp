#include "rankrange/io.hpp"

#include <fstream>
#include <sstream>

#include "rankrange/errors.hpp"

namespace rankrange {

Mat read_matrix(std::istream& in) {
    std::size_t m = 0, n = 0;
    std::uint64_t p = 0;
    if (!(in >> m >> n >> p))
        throw ParseError("expected header line \"m n p\"");
    Fp f(p);
    Mat A(m, n, f);
    for (std::size_t i = 1; i <= m; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
            std::uint64_t v;
            if (!(in >> v))
                throw ParseError("expected " + std::to_string(m * n) +
                                 " matrix entries");
            if (v >= p) throw ParseError("entry is not a residue mod p");
            A.set(i, j, static_cast<std::uint32_t>(v));
        }
    return A;
}

void write_matrix(std::ostream& out, const Mat& A) {
    out << A.rows() << ' ' << A.cols() << ' ' << A.field().modulus() << '\n';
    for (std::size_t i = 1; i <= A.rows(); ++i) {
        for (std::size_t j = 1; j <= A.cols(); ++j) {
            if (j > 1) out << ' ';
            out << A.at(i, j);
        }
        out << '\n';
    }
}

Mat read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_matrix(in);
}

void write_matrix_file(const std::string& path, const Mat& A) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    write_matrix(out, A);
}

namespace {

nlohmann::json mat_entries(const Mat& A) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 1; i <= A.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 1; j <= A.cols(); ++j) row.push_back(A.at(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

Mat mat_from_entries(const nlohmann::json& rows, std::size_t m, std::size_t n,
                     const Fp& f) {
    if (!rows.is_array() || rows.size() != m)
        throw ParseError("matrix must have m rows");
    Mat A(m, n, f);
    for (std::size_t i = 0; i < m; ++i) {
        const auto& row = rows[i];
        if (!row.is_array() || row.size() != n)
            throw ParseError("matrix row must have n entries");
        for (std::size_t j = 0; j < n; ++j) {
            std::uint64_t v = row[j].get<std::uint64_t>();
            if (v >= f.modulus())
                throw ParseError("entry is not a residue mod p");
            A.set(i + 1, j + 1, static_cast<std::uint32_t>(v));
        }
    }
    return A;
}

}  // namespace

nlohmann::json space_to_json(const AffineSpace& S) {
    nlohmann::json j;
    j["p"] = S.field().modulus();
    j["m"] = S.mat_rows();
    j["n"] = S.mat_cols();
    j["ambient"] = S.ambient() == Ambient::Skew ? "skew" : "full";
    j["offset"] = mat_entries(S.offset());
    nlohmann::json basis = nlohmann::json::array();
    for (const Mat& b : S.basis()) basis.push_back(mat_entries(b));
    j["basis"] = std::move(basis);
    return j;
}

AffineSpace space_from_json(const nlohmann::json& j) {
    Fp f(j.at("p").get<std::uint64_t>());
    std::size_t m = j.at("m").get<std::size_t>();
    std::size_t n = j.at("n").get<std::size_t>();
    std::string amb = j.value("ambient", "full");
    if (amb != "full" && amb != "skew")
        throw ParseError("ambient must be \"full\" or \"skew\"");
    Mat offset = mat_from_entries(j.at("offset"), m, n, f);
    std::vector<Mat> basis;
    for (const auto& b : j.at("basis"))
        basis.push_back(mat_from_entries(b, m, n, f));
    return AffineSpace(std::move(offset), std::move(basis),
                       amb == "skew" ? Ambient::Skew : Ambient::Full);
}

AffineSpace read_space_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
    return space_from_json(j);
}

void write_space_file(const std::string& path, const AffineSpace& S) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    out << space_to_json(S).dump(2) << '\n';
}

}  // namespace rankrange
