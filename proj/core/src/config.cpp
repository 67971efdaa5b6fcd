#include "modinv/config.hpp"

#include <algorithm>
#include <sstream>

namespace modinv {

std::string command_name(Command c) {
    switch (c) {
        case Command::group: return "group";
        case Command::invariants: return "invariants";
        case Command::present: return "present";
        case Command::diagnose: return "diagnose";
        case Command::grade: return "grade";
        case Command::transfer: return "transfer";
        case Command::verify: return "verify";
    }
    return "?";
}

std::optional<Command> command_from(const std::string& name) {
    for (Command c : {Command::group, Command::invariants, Command::present, Command::diagnose,
                      Command::grade, Command::transfer, Command::verify})
        if (command_name(c) == name) return c;
    return std::nullopt;
}

bool RunConfig::operator==(const RunConfig& o) const {
    return p == o.p && n == o.n && generators == o.generators &&
           degree_bound == o.degree_bound && ideal_elements == o.ideal_elements &&
           command == o.command && group_cap == o.group_cap;
}

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

long long parse_int(const std::string& s, int line) {
    try {
        size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw ParseError(line, "expected an integer, got '" + s + "'");
    }
}

}  // namespace

RunConfig parse_config(const std::string& text) {
    RunConfig c;
    bool saw_p = false, saw_n = false;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    std::vector<std::pair<int, std::string>> generator_lines;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos) throw ParseError(lineno, "expected 'key = value'");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key == "p") {
            long long v = parse_int(value, lineno);
            if (v < 2 || v > 0x7fffffffLL) throw ParseError(lineno, "p out of range");
            c.p = static_cast<std::uint32_t>(v);
            saw_p = true;
        } else if (key == "n") {
            long long v = parse_int(value, lineno);
            if (v < 1 || v > 64) throw ParseError(lineno, "n out of range [1, 64]");
            c.n = static_cast<int>(v);
            saw_n = true;
        } else if (key == "degree_bound") {
            long long v = parse_int(value, lineno);
            if (v < 1 || v > 200) throw ParseError(lineno, "degree_bound out of range [1, 200]");
            c.degree_bound = static_cast<int>(v);
        } else if (key == "generator") {
            generator_lines.emplace_back(lineno, value);
        } else if (key == "ideal_element") {
            c.ideal_elements.push_back(value);
        } else if (key == "command") {
            auto cmd = command_from(value);
            if (!cmd) throw ParseError(lineno, "unknown command '" + value + "'");
            c.command = cmd;
        } else if (key == "group_cap") {
            long long v = parse_int(value, lineno);
            if (v < 1) throw ParseError(lineno, "group_cap must be positive");
            c.group_cap = static_cast<size_t>(v);
        } else {
            throw ParseError(lineno, "unknown key '" + key + "'");
        }
    }
    if (!saw_p) throw ValidationError("missing key: p");
    if (!saw_n) throw ValidationError("missing key: n");
    if (!PrimeField::is_prime(c.p))
        throw ValidationError("p = " + std::to_string(c.p) + " is not prime");

    for (auto& [lineno, value] : generator_lines) {
        std::vector<std::vector<fp_t>> mat;
        std::istringstream rows(value);
        std::string row;
        while (std::getline(rows, row, ';')) {
            std::vector<fp_t> r;
            std::istringstream cells(row);
            std::string cell;
            while (cells >> cell) {
                long long v = parse_int(cell, lineno);
                if (v < 0 || v >= static_cast<long long>(c.p))
                    throw ValidationError("matrix entry " + std::to_string(v) +
                                          " outside [0, p)");
                r.push_back(static_cast<fp_t>(v));
            }
            if (static_cast<int>(r.size()) != c.n)
                throw ValidationError("generator row has " + std::to_string(r.size()) +
                                      " entries, expected " + std::to_string(c.n));
            mat.push_back(std::move(r));
        }
        if (static_cast<int>(mat.size()) != c.n)
            throw ValidationError("generator has " + std::to_string(mat.size()) +
                                  " rows, expected " + std::to_string(c.n));
        c.generators.push_back(std::move(mat));
    }
    if (c.generators.empty()) throw ValidationError("missing key: generator");
    return c;
}

std::string render_config(const RunConfig& c) {
    std::ostringstream os;
    os << "p = " << c.p << "\n";
    os << "n = " << c.n << "\n";
    if (c.degree_bound) os << "degree_bound = " << *c.degree_bound << "\n";
    for (auto& m : c.generators) {
        os << "generator = ";
        for (size_t r = 0; r < m.size(); ++r) {
            if (r) os << "; ";
            for (size_t j = 0; j < m[r].size(); ++j) {
                if (j) os << " ";
                os << m[r][j];
            }
        }
        os << "\n";
    }
    for (auto& e : c.ideal_elements) os << "ideal_element = " << e << "\n";
    if (c.command) os << "command = " << command_name(*c.command) << "\n";
    if (c.group_cap != 10000) os << "group_cap = " << c.group_cap << "\n";
    return os.str();
}

namespace {

std::vector<std::vector<fp_t>> cycle_matrix(int n) {
    // x_i -> x_{i+1}, x_n -> x_1
    std::vector<std::vector<fp_t>> m(static_cast<size_t>(n),
                                     std::vector<fp_t>(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)][static_cast<size_t>((i + 1) % n)] = 1;
    return m;
}

std::vector<std::vector<fp_t>> transposition_matrix(int n, int a, int b) {
    std::vector<std::vector<fp_t>> m(static_cast<size_t>(n),
                                     std::vector<fp_t>(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i) {
        int j = i == a ? b : (i == b ? a : i);
        m[static_cast<size_t>(i)][static_cast<size_t>(j)] = 1;
    }
    return m;
}

std::vector<std::vector<fp_t>> identity_matrix(int n) {
    std::vector<std::vector<fp_t>> m(static_cast<size_t>(n),
                                     std::vector<fp_t>(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    return m;
}

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> out;

    RunConfig bertin;
    bertin.p = 2;
    bertin.n = 4;
    bertin.generators = {cycle_matrix(4)};
    bertin.degree_bound = 12;
    bertin.ideal_elements = {"x1 + x2 + x3 + x4", "x1*x3 + x2*x4",
                             "x1*x2*x3 + x1*x2*x4 + x1*x3*x4 + x2*x3*x4"};
    out.push_back({"bertin", bertin});

    RunConfig swap2;
    swap2.p = 2;
    swap2.n = 2;
    swap2.generators = {transposition_matrix(2, 0, 1)};
    out.push_back({"swap2", swap2});

    RunConfig cyc3_f3;
    cyc3_f3.p = 3;
    cyc3_f3.n = 3;
    cyc3_f3.generators = {cycle_matrix(3)};
    out.push_back({"cyc3_f3", cyc3_f3});

    RunConfig s3_f2;
    s3_f2.p = 2;
    s3_f2.n = 3;
    s3_f2.generators = {transposition_matrix(3, 0, 1), transposition_matrix(3, 1, 2)};
    out.push_back({"s3_f2", s3_f2});

    RunConfig trivial4;
    trivial4.p = 2;
    trivial4.n = 4;
    trivial4.generators = {identity_matrix(4)};
    out.push_back({"trivial4", trivial4});

    RunConfig cyc3_f2;
    cyc3_f2.p = 2;
    cyc3_f2.n = 3;
    cyc3_f2.generators = {cycle_matrix(3)};
    out.push_back({"cyc3_f2", cyc3_f2});

    return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

const CatalogEntry& catalog_lookup(const std::string& name) {
    for (auto& e : catalog())
        if (e.name == name) return e;
    std::string names;
    for (auto& e : catalog()) {
        if (!names.empty()) names += ", ";
        names += e.name;
    }
    throw ValidationError("unknown catalog entry '" + name + "'; known: " + names);
}

std::optional<std::string> catalog_match(const RunConfig& c) {
    for (auto& e : catalog()) {
        RunConfig probe = e.config;
        probe.command = c.command;  // command does not change the instance
        if (probe == c) return e.name;
    }
    return std::nullopt;
}

MatrixGroup build_group(const RunConfig& c) {
    PrimeField F(c.p);
    std::vector<FpMatrix> gens;
    for (auto& m : c.generators) {
        FpMatrix M(F, static_cast<size_t>(c.n), static_cast<size_t>(c.n));
        for (int i = 0; i < c.n; ++i)
            for (int j = 0; j < c.n; ++j)
                M.at(static_cast<size_t>(i), static_cast<size_t>(j)) =
                    m[static_cast<size_t>(i)][static_cast<size_t>(j)];
        gens.push_back(std::move(M));
    }
    return MatrixGroup::closure(F, c.n, std::move(gens), c.group_cap);
}

}  // namespace modinv
