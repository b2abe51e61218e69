#include "bergman/io.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace bergman::io {

cplx complex_from_json(const json& j) {
    if (j.is_number()) return cplx{j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
        return cplx{j[0].get<double>(), j[1].get<double>()};
    }
    throw ParseError("expected a number or [re,im] pair, got " + j.dump());
}

json complex_to_json(const cplx& z) {
    return json::array({z.real(), z.imag()});
}

namespace {

std::vector<cplx> parse_coeff_list(const json& j) {
    if (!j.is_array()) throw ParseError("expected coefficient array, got " + j.dump());
    std::vector<cplx> coeffs;
    coeffs.reserve(j.size());
    for (const auto& c : j) coeffs.push_back(complex_from_json(c));
    return coeffs;
}

}  // namespace

Symbol parse_symbol(const json& doc) {
    if (!doc.is_object()) throw ParseError("symbol spec must be an object");
    const int have = static_cast<int>(doc.contains("bipoly")) +
                     static_cast<int>(doc.contains("modes")) +
                     static_cast<int>(doc.contains("radial"));
    if (have != 1) {
        throw ParseError("symbol spec needs exactly one of \"bipoly\", \"modes\", \"radial\"");
    }
    if (doc.contains("radial")) {
        return Symbol::radial(make_radial_polynomial(parse_coeff_list(doc["radial"])));
    }
    if (doc.contains("bipoly")) {
        std::vector<BipolyTerm> terms;
        for (const auto& t : doc["bipoly"]) {
            if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() ||
                !t[1].is_number_integer()) {
                throw ParseError("bipoly term must be [j,k,coefficient]: " + t.dump());
            }
            terms.push_back({t[0].get<int>(), t[1].get<int>(), complex_from_json(t[2])});
        }
        return symbol_from_bipoly(terms);
    }
    std::map<int, RadialProfile> modes;
    for (const auto& entry : doc["modes"]) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer()) {
            throw ParseError("mode entry must be [m,[coeffs...]]: " + entry.dump());
        }
        const int m = entry[0].get<int>();
        if (modes.count(m) != 0) throw ParseError("duplicate mode index in symbol spec");
        modes.emplace(m, make_radial_polynomial(parse_coeff_list(entry[1])));
    }
    return Symbol(std::move(modes));
}

AtomicMeasure parse_measure(const json& doc) {
    if (!doc.is_object() || !doc.contains("atoms")) {
        throw ParseError("measure spec must be an object with an \"atoms\" field");
    }
    std::vector<Atom> atoms;
    for (const auto& a : doc["atoms"]) {
        if (!a.is_array() || a.size() != 2) {
            throw ParseError("atom must be [[re,im],[wre,wim]]: " + a.dump());
        }
        atoms.push_back({complex_from_json(a[0]), complex_from_json(a[1])});
    }
    return AtomicMeasure(std::move(atoms));
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return std::string(buf);
}

namespace {

void write_json_impl(std::ostream& out, const json& doc, int indent, int depth) {
    const std::string pad = indent > 0 ? std::string(static_cast<std::size_t>(indent) *
                                                     (static_cast<std::size_t>(depth) + 1), ' ')
                                       : "";
    const std::string close_pad =
        indent > 0 ? std::string(static_cast<std::size_t>(indent) *
                                 static_cast<std::size_t>(depth), ' ')
                   : "";
    const char* nl = indent > 0 ? "\n" : "";
    switch (doc.type()) {
        case json::value_t::object: {
            out << "{" << nl;
            bool first = true;
            for (const auto& [key, value] : doc.items()) {
                if (!first) out << "," << nl;
                first = false;
                out << pad << json(key).dump() << (indent > 0 ? ": " : ":");
                write_json_impl(out, value, indent, depth + 1);
            }
            out << nl << close_pad << "}";
            break;
        }
        case json::value_t::array: {
            out << "[" << nl;
            bool first = true;
            for (const auto& value : doc) {
                if (!first) out << "," << nl;
                first = false;
                out << pad;
                write_json_impl(out, value, indent, depth + 1);
            }
            out << nl << close_pad << "]";
            break;
        }
        case json::value_t::number_float:
            out << format_double(doc.get<double>());
            break;
        default:
            out << doc.dump();
            break;
    }
}

}  // namespace

void write_json(std::ostream& out, const json& doc, int indent) {
    write_json_impl(out, doc, indent, 0);
}

std::string dump_json(const json& doc) {
    std::ostringstream out;
    write_json(out, doc, 2);
    out << "\n";
    return out.str();
}

void write_matrix_csv(std::ostream& out, const ComplexMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) out << ",";
            out << format_double(m(i, j).real()) << "," << format_double(m(i, j).imag());
        }
        out << "\n";
    }
}

ComplexMatrix read_matrix_csv(std::istream& in) {
    std::vector<std::vector<cplx>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> fields;
        std::istringstream row(line);
        std::string field;
        while (std::getline(row, field, ',')) {
            fields.push_back(std::stod(field));
        }
        if (fields.size() % 2 != 0) throw ParseError("matrix CSV row has odd field count");
        std::vector<cplx> entries;
        for (std::size_t j = 0; j < fields.size(); j += 2) {
            entries.emplace_back(fields[j], fields[j + 1]);
        }
        rows.push_back(std::move(entries));
    }
    if (rows.empty()) throw ParseError("matrix CSV is empty");
    ComplexMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size()) throw ParseError("ragged matrix CSV");
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

}  // namespace bergman::io
