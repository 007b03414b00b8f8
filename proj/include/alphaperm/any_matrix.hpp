// Copyright 2026 The alphaperm Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file any_matrix.hpp
 * @brief Field-tagged matrix and its text file format.
 *
 * File format (JSON text, 1 row of entries per line when written):
 *
 *   {
 *     "n": 2,
 *     "field": "rational",
 *     "flags": ["real-symmetric", "hermitian"],
 *     "entries": [
 *       ["1", "1/2"],
 *       ["1/2", "3"]
 *     ]
 *   }
 *
 * field is one of rational, complex-rational, float, complex-float; entries are
 * scalar strings in the textual syntax of scalar.hpp. Claimed flags are
 * verified on load. Writing is canonical, so exact matrices round-trip byte for byte.
 */

#pragma once

#include <alphaperm/matrix.hpp>
#include <alphaperm/random.hpp>
#include <alphaperm/scalar.hpp>

#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <variant>

namespace alphaperm {

enum class Field { Rational, ComplexRational, Float, ComplexFloat };

inline const char* to_string(Field f) {
    switch (f) {
        case Field::Rational: return "rational";
        case Field::ComplexRational: return "complex-rational";
        case Field::Float: return "float";
        case Field::ComplexFloat: return "complex-float";
    }
    return "?";
}

inline Field parse_field(std::string_view s) {
    if (s == "rational") return Field::Rational;
    if (s == "complex-rational") return Field::ComplexRational;
    if (s == "float") return Field::Float;
    if (s == "complex-float") return Field::ComplexFloat;
    throw ParseError("unknown field '" + std::string(s) + "'");
}

struct MatrixFlags {
    bool real_symmetric = false;
    bool hermitian = false;
    friend bool operator==(const MatrixFlags&, const MatrixFlags&) = default;
};

class AnyMatrix {
public:
    using Storage =
        std::variant<Matrix<Rational>, Matrix<GaussianRational>, Matrix<double>, Matrix<std::complex<double>>>;

    AnyMatrix() = default;
    template <class T>
    explicit AnyMatrix(Matrix<T> m, MatrixFlags flags = {}) : storage_(std::move(m)), flags_(flags) {}

    Field field() const { return static_cast<Field>(storage_.index()); }
    bool is_exact() const { return field() == Field::Rational || field() == Field::ComplexRational; }
    std::size_t size() const {
        return std::visit([](const auto& m) { return m.size(); }, storage_);
    }
    const MatrixFlags& flags() const { return flags_; }
    const Storage& storage() const { return storage_; }

    template <class T>
    const Matrix<T>& get() const {
        if (const auto* m = std::get_if<Matrix<T>>(&storage_)) return *m;
        throw FieldMismatchError(std::string("matrix has field ") + to_string(field()));
    }

    Scalar at(std::size_t i, std::size_t j) const {
        return std::visit([&](const auto& m) { return Scalar(m(i, j)); }, storage_);
    }

    /// Flags as they actually hold for the stored entries.
    MatrixFlags detected_flags() const {
        return std::visit([](const auto& m) { return MatrixFlags{is_real_symmetric(m), is_hermitian(m)}; }, storage_);
    }

    friend bool operator==(const AnyMatrix& a, const AnyMatrix& b) {
        return a.storage_ == b.storage_ && a.flags_ == b.flags_;
    }

private:
    Storage storage_{Matrix<Rational>()};
    MatrixFlags flags_{};
};

inline std::string serialize_matrix(const AnyMatrix& m) {
    std::string out = "{\n  \"n\": " + std::to_string(m.size()) + ",\n  \"field\": \"" + to_string(m.field()) +
                      "\",\n  \"flags\": [";
    bool first = true;
    if (m.flags().real_symmetric) {
        out += "\"real-symmetric\"";
        first = false;
    }
    if (m.flags().hermitian) out += std::string(first ? "" : ", ") + "\"hermitian\"";
    out += "],\n  \"entries\": [";
    const std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i) {
        out += i == 0 ? "\n    [" : ",\n    [";
        for (std::size_t j = 0; j < n; ++j) out += (j ? ", \"" : "\"") + m.at(i, j).str() + "\"";
        out += "]";
    }
    out += n > 0 ? "\n  ]\n}\n" : "]\n}\n";
    return out;
}

namespace detail {

template <class T>
Matrix<T> entries_from_json(const nlohmann::json& rows, std::size_t n) {
    Matrix<T> a(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& row = rows.at(i);
        if (!row.is_array() || row.size() != n)
            throw ParseError("row " + std::to_string(i + 1) + " must be an array of " + std::to_string(n) + " entries");
        for (std::size_t j = 0; j < n; ++j) {
            const auto& cell = row.at(j);
            if (!cell.is_string())
                throw ParseError("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") must be a string");
            a(i, j) = Scalar::parse(cell.get<std::string>()).as<T>();
        }
    }
    return a;
}

}  // namespace detail

inline AnyMatrix parse_matrix(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("matrix file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("matrix file must hold a JSON object");
    for (const char* key : {"n", "field", "entries"})
        if (!doc.contains(key)) throw ParseError(std::string("matrix file is missing \"") + key + "\"");
    if (!doc["n"].is_number_unsigned()) throw ParseError("\"n\" must be a nonnegative integer");
    const auto n = doc["n"].get<std::size_t>();
    if (!doc["field"].is_string()) throw ParseError("\"field\" must be a string");
    const Field field = parse_field(doc["field"].get<std::string>());
    const auto& rows = doc["entries"];
    if (!rows.is_array() || rows.size() != n) throw ParseError("\"entries\" must be an array of " + std::to_string(n) + " rows");

    MatrixFlags flags;
    if (doc.contains("flags")) {
        if (!doc["flags"].is_array()) throw ParseError("\"flags\" must be an array");
        for (const auto& f : doc["flags"]) {
            if (!f.is_string()) throw ParseError("flags must be strings");
            const auto s = f.get<std::string>();
            if (s == "real-symmetric")
                flags.real_symmetric = true;
            else if (s == "hermitian")
                flags.hermitian = true;
            else
                throw ParseError("unknown flag '" + s + "'");
        }
    }

    AnyMatrix out;
    try {
        switch (field) {
            case Field::Rational: out = AnyMatrix(detail::entries_from_json<Rational>(rows, n), flags); break;
            case Field::ComplexRational: out = AnyMatrix(detail::entries_from_json<GaussianRational>(rows, n), flags); break;
            case Field::Float: out = AnyMatrix(detail::entries_from_json<double>(rows, n), flags); break;
            case Field::ComplexFloat:
                out = AnyMatrix(detail::entries_from_json<std::complex<double>>(rows, n), flags);
                break;
        }
    } catch (const FieldMismatchError& e) {
        throw ParseError(std::string("entry does not match field ") + to_string(field) + ": " + e.what());
    } catch (const DomainError& e) {
        throw ParseError(std::string("entry does not match field ") + to_string(field) + ": " + e.what());
    }
    const MatrixFlags actual = out.detected_flags();
    if (flags.real_symmetric && !actual.real_symmetric) throw ParseError("matrix is flagged real-symmetric but is not");
    if (flags.hermitian && !actual.hermitian) throw ParseError("matrix is flagged hermitian but is not");
    return out;
}

/// Reads a matrix file; "-" reads standard input.
inline AnyMatrix read_matrix_file(const std::string& path) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw ParseError("cannot open matrix file '" + path + "'");
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    try {
        return parse_matrix(text);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

inline void write_matrix_file(const std::string& path, const AnyMatrix& m) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write '" + path + "'");
    out << serialize_matrix(m);
}

/// Seeded Gram instance B B^* with entries of B drawn as p/q, |p| <= scale, 1 <= q <= scale.
inline AnyMatrix random_psd(std::size_t n, PsdKind kind, std::int64_t scale, std::uint64_t seed) {
    if (scale < 1) throw DomainError("random_psd: scale must be >= 1");
    Rng rng(seed);
    if (kind == PsdKind::RealSymmetric) return AnyMatrix(random_gram_real(n, scale, rng), {true, true});
    auto g = random_gram_hermitian(n, scale, rng);
    return AnyMatrix(std::move(g), {is_real_symmetric(g), true});
}

}  // namespace alphaperm
