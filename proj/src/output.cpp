#include "kkspace/output.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>

#include <json.hpp>

namespace kkspace {

using ordered_json = nlohmann::ordered_json;

std::string format_number(double v) {
    if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

namespace {

std::string opt_number(const std::optional<double> &v) {
    return v ? format_number(*v) : "nan";
}

ordered_json opt_json(const std::optional<double> &v) {
    if (!v || !std::isfinite(*v)) return nullptr;
    return *v;
}

void spectrum_csv(std::ostream &os, const std::vector<SpectrumRow> &rows,
                  const char *prefix_header, const std::string &prefix_value) {
    os << prefix_header << "delta_p_over_gamma12,R_l,R_r,T,C,D_kk,regime\n";
    for (const SpectrumRow &r : rows) {
        os << prefix_value << format_number(r.delta_p) << ',' << format_number(r.R_l)
           << ',' << format_number(r.R_r) << ',' << format_number(r.T) << ','
           << opt_number(r.C) << ',' << opt_number(r.d_kk) << ','
           << regime_name(r.regime) << '\n';
    }
}

ordered_json spectrum_json_rows(const std::vector<SpectrumRow> &rows) {
    ordered_json arr = ordered_json::array();
    for (const SpectrumRow &r : rows) {
        ordered_json row;
        row["delta_p_over_gamma12"] = r.delta_p;
        row["R_l"] = r.R_l;
        row["R_r"] = r.R_r;
        row["T"] = r.T;
        row["C"] = opt_json(r.C);
        row["D_kk"] = opt_json(r.d_kk);
        row["regime"] = regime_name(r.regime);
        arr.push_back(std::move(row));
    }
    return arr;
}

ordered_json envelope(const char *kind) {
    ordered_json doc;
    doc["schema_version"] = schema_version;
    doc["kind"] = kind;
    return doc;
}

} // namespace

void write_spectrum(std::ostream &os, const std::vector<SpectrumRow> &rows,
                    OutputFormat format) {
    if (format == OutputFormat::Csv) {
        spectrum_csv(os, rows, "", "");
        return;
    }
    ordered_json doc = envelope("spectrum");
    doc["rows"] = spectrum_json_rows(rows);
    os << doc.dump(2) << '\n';
}

void write_profile(std::ostream &os, const ProfileTable &table, OutputFormat format) {
    if (format == OutputFormat::Csv) {
        os << "x_m,chi_re,chi_im,chi_kk_re\n";
        for (std::size_t i = 0; i < table.x.size(); ++i) {
            os << format_number(table.x[i]) << ',' << format_number(table.chi_re[i])
               << ',' << format_number(table.chi_im[i]) << ','
               << format_number(table.chi_kk_re[i]) << '\n';
        }
        return;
    }
    ordered_json doc = envelope("profile");
    doc["x_m"] = table.x;
    doc["chi_re"] = table.chi_re;
    doc["chi_im"] = table.chi_im;
    doc["chi_kk_re"] = table.chi_kk_re;
    os << doc.dump(2) << '\n';
}

void write_map(std::ostream &os, const MapResult &map, OutputFormat format) {
    if (format == OutputFormat::Csv) {
        os << "delta0_over_gamma12,delta_p_over_gamma12,D_kk,R_l,R_r\n";
        for (std::size_t i = 0; i < map.delta0_axis.size(); ++i) {
            for (std::size_t j = 0; j < map.delta_p_axis.size(); ++j) {
                const MapCell &cell = map.cell(i, j);
                os << format_number(map.delta0_axis[i]) << ','
                   << format_number(map.delta_p_axis[j]) << ','
                   << opt_number(cell.d_kk) << ',' << format_number(cell.R_l) << ','
                   << format_number(cell.R_r) << '\n';
            }
        }
        return;
    }
    ordered_json doc = envelope("map");
    doc["delta0_over_gamma12"] = map.delta0_axis;
    doc["delta_p_over_gamma12"] = map.delta_p_axis;
    ordered_json d_kk = ordered_json::array(), r_l = ordered_json::array(),
                 r_r = ordered_json::array();
    for (std::size_t i = 0; i < map.delta0_axis.size(); ++i) {
        ordered_json dk_row = ordered_json::array(), rl_row = ordered_json::array(),
                     rr_row = ordered_json::array();
        for (std::size_t j = 0; j < map.delta_p_axis.size(); ++j) {
            const MapCell &cell = map.cell(i, j);
            dk_row.push_back(opt_json(cell.d_kk));
            rl_row.push_back(cell.R_l);
            rr_row.push_back(cell.R_r);
        }
        d_kk.push_back(std::move(dk_row));
        r_l.push_back(std::move(rl_row));
        r_r.push_back(std::move(rr_row));
    }
    doc["D_kk"] = std::move(d_kk);
    doc["R_l"] = std::move(r_l);
    doc["R_r"] = std::move(r_r);
    os << doc.dump(2) << '\n';
}

void write_length_sweep(std::ostream &os, const std::vector<LengthSpectrum> &sweep,
                        OutputFormat format) {
    if (format == OutputFormat::Csv) {
        bool first = true;
        for (const LengthSpectrum &ls : sweep) {
            if (first) {
                spectrum_csv(os, ls.rows, "L_m,", format_number(ls.length) + ",");
                first = false;
            } else {
                for (const SpectrumRow &r : ls.rows) {
                    os << format_number(ls.length) << ',' << format_number(r.delta_p)
                       << ',' << format_number(r.R_l) << ',' << format_number(r.R_r)
                       << ',' << format_number(r.T) << ',' << opt_number(r.C) << ','
                       << opt_number(r.d_kk) << ',' << regime_name(r.regime) << '\n';
                }
            }
        }
        return;
    }
    ordered_json doc = envelope("lengths");
    ordered_json arr = ordered_json::array();
    for (const LengthSpectrum &ls : sweep) {
        ordered_json entry;
        entry["L_m"] = ls.length;
        entry["rows"] = spectrum_json_rows(ls.rows);
        arr.push_back(std::move(entry));
    }
    doc["spectra"] = std::move(arr);
    os << doc.dump(2) << '\n';
}

void write_lattice(std::ostream &os, const LatticeResult &result,
                   OutputFormat format) {
    if (format == OutputFormat::Csv) {
        spectrum_csv(os, result.rows, "", "");
        return;
    }
    ordered_json doc = envelope("lattice");
    ordered_json summary;
    summary["max_C"] = result.max_contrast;
    summary["contrast_threshold"] = result.contrast_threshold;
    if (result.has_contrast_band) {
        summary["contrast_band_lo"] = result.contrast_band_lo;
        summary["contrast_band_hi"] = result.contrast_band_hi;
    } else {
        summary["contrast_band_lo"] = nullptr;
        summary["contrast_band_hi"] = nullptr;
    }
    summary["max_R_r_unbroken"] = result.max_R_r_unbroken;
    summary["R_l_at_max_R_r"] = result.R_l_at_max_R_r;
    summary["delta_p_at_max_R_r"] = opt_json(result.delta_p_at_max_R_r);
    doc["summary"] = std::move(summary);
    doc["rows"] = spectrum_json_rows(result.rows);
    os << doc.dump(2) << '\n';
}

void write_to_destination(const RunConfig &config, std::ostream &fallback,
                          const std::function<void(std::ostream &)> &writer) {
    if (config.out_path.empty()) {
        writer(fallback);
        if (!fallback) throw IoError("write failed");
        return;
    }
    std::ofstream out(config.out_path, std::ios::binary);
    if (!out) throw IoError("cannot open output path: " + config.out_path);
    writer(out);
    out.flush();
    if (!out) throw IoError("write failed: " + config.out_path);
}

} // namespace kkspace
