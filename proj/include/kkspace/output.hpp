#ifndef KKSPACE_OUTPUT_HPP
#define KKSPACE_OUTPUT_HPP

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "kkspace/config.hpp"
#include "kkspace/experiments.hpp"

namespace kkspace {

// Fixed 9-significant-digit representation; "nan" for missing values.
std::string format_number(double v);

void write_spectrum(std::ostream &os, const std::vector<SpectrumRow> &rows,
                    OutputFormat format);
void write_profile(std::ostream &os, const ProfileTable &table,
                   OutputFormat format);
void write_map(std::ostream &os, const MapResult &map, OutputFormat format);
void write_length_sweep(std::ostream &os, const std::vector<LengthSpectrum> &sweep,
                        OutputFormat format);
void write_lattice(std::ostream &os, const LatticeResult &result,
                   OutputFormat format);

// Writes to config.out_path (or `fallback` when empty, normally std::cout).
// Throws IoError when the path cannot be opened or written.
void write_to_destination(const RunConfig &config, std::ostream &fallback,
                          const std::function<void(std::ostream &)> &writer);

} // namespace kkspace

#endif
