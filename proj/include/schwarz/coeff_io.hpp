#ifndef SCHWARZ_COEFF_IO_HPP
#define SCHWARZ_COEFF_IO_HPP

#include <filesystem>
#include <iosfwd>

#include <schwarz/series.hpp>

namespace schwarz
{

// Coefficient files are UTF-8 text with one "re im" pair per line; line n
// (0-based) holds the coefficient of z^n. Numbers use '.' as the decimal
// separator regardless of locale.

ComplexSeries parse_coefficients(std::istream &in);
ComplexSeries read_coefficients(const std::filesystem::path &path);

// Shortest round-trip representation of each component.
void write_coefficients(std::ostream &out, const ComplexSeries &series);
void write_coefficients(const std::filesystem::path &path, const ComplexSeries &series);

} // namespace schwarz

#endif
