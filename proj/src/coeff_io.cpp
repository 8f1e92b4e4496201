#include <schwarz/coeff_io.hpp>

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <schwarz/errors.hpp>

namespace schwarz
{

namespace
{

bool is_space(char c)
{
    return c == ' ' || c == '\t' || c == '\r';
}

std::string_view next_token(std::string_view &rest)
{
    std::size_t b = 0;
    while (b < rest.size() && is_space(rest[b])) {
        ++b;
    }
    std::size_t e = b;
    while (e < rest.size() && !is_space(rest[e])) {
        ++e;
    }
    const auto tok = rest.substr(b, e - b);
    rest.remove_prefix(e);
    return tok;
}

double parse_number(std::string_view tok, std::size_t line)
{
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw FormatError("line " + std::to_string(line) + ": '" + std::string(tok) + "' is not a number");
    }
    return value;
}

void put_number(std::ostream &out, double x)
{
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    out.write(buf, ptr - buf);
}

} // namespace

ComplexSeries parse_coefficients(std::istream &in)
{
    std::vector<cplx> coeffs;
    std::vector<std::size_t> blank;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        std::string_view rest = line;
        const auto re = next_token(rest);
        if (re.empty()) {
            blank.push_back(lineno++);
            continue;
        }
        if (!blank.empty()) {
            throw FormatError("line " + std::to_string(blank.front()) + ": blank line inside coefficient list");
        }
        const auto im = next_token(rest);
        if (im.empty() || !next_token(rest).empty()) {
            throw FormatError("line " + std::to_string(lineno) + ": expected exactly two numbers 're im'");
        }
        coeffs.emplace_back(parse_number(re, lineno), parse_number(im, lineno));
        ++lineno;
    }
    if (coeffs.empty()) {
        throw FormatError("coefficient list is empty");
    }
    try {
        return ComplexSeries(std::move(coeffs));
    } catch (const DomainError &e) {
        throw FormatError(e.what());
    }
}

ComplexSeries read_coefficients(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    return parse_coefficients(in);
}

void write_coefficients(std::ostream &out, const ComplexSeries &series)
{
    for (const auto &c : series.coeffs()) {
        put_number(out, c.real());
        out << ' ';
        put_number(out, c.imag());
        out << '\n';
    }
}

void write_coefficients(const std::filesystem::path &path, const ComplexSeries &series)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot write " + path.string());
    }
    write_coefficients(out, series);
    if (!out) {
        throw IoError("write to " + path.string() + " failed");
    }
}

} // namespace schwarz
