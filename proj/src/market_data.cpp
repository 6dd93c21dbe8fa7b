#include "jumpvar/market_data.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "jumpvar/text.hpp"

namespace jumpvar {

namespace {

bool parse_price(const std::string& cell, double& out) {
    size_t pos = 0;
    try {
        out = std::stod(cell, &pos);
    } catch (const std::exception&) {
        return false;
    }
    // Reject trailing garbage like "12.3abc".
    while (pos < cell.size() && (cell[pos] == ' ' || cell[pos] == '\t')) ++pos;
    return pos == cell.size() && std::isfinite(out);
}

bool is_blank(const std::string& s) {
    return s.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace

LoadResult load_prices(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("missing file: " + path);

    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error(path + ": no data rows");
    const auto header = split_csv_line(line);
    if (header.size() < 2) {
        throw std::runtime_error(path + ": header must name a date column and at least one price column");
    }

    LoadResult result;
    const size_t n_assets = header.size() - 1;
    result.series.resize(n_assets);
    for (size_t a = 0; a < n_assets; ++a) result.series[a].asset_id = header[a + 1];

    std::set<std::int64_t> seen_dates;
    size_t row = 1;  // header was row 1
    size_t data_rows = 0;
    while (std::getline(in, line)) {
        ++row;
        if (is_blank(line)) continue;
        const auto cells = split_csv_line(line);
        Date date;
        if (!Date::try_parse(cells[0], date)) {
            result.warnings.push_back("row " + std::to_string(row) + ": unparsable date '" +
                                      cells[0] + "' (row rejected)");
            continue;
        }
        if (!seen_dates.insert(date.serial()).second) {
            throw std::runtime_error(path + ": duplicate date " + date.to_string() +
                                     " at row " + std::to_string(row));
        }
        if (cells.size() != header.size()) {
            throw std::runtime_error(path + ": row " + std::to_string(row) + " has " +
                                     std::to_string(cells.size()) + " cells, expected " +
                                     std::to_string(header.size()));
        }
        ++data_rows;
        for (size_t a = 0; a < n_assets; ++a) {
            const std::string& cell = cells[a + 1];
            if (is_blank(cell)) continue;  // missing observation
            double price;
            if (!parse_price(cell, price)) {
                throw std::runtime_error(path + ": non-numeric price '" + cell + "' at row " +
                                         std::to_string(row) + ", column '" + header[a + 1] + "'");
            }
            result.series[a].dates.push_back(date);
            result.series[a].prices.push_back(price);
        }
    }
    if (data_rows == 0) throw std::runtime_error(path + ": no data rows");

    // Input rows may be unordered; observed points per asset get sorted by date.
    for (auto& s : result.series) {
        std::vector<size_t> idx(s.dates.size());
        for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(),
                  [&](size_t i, size_t j) { return s.dates[i] < s.dates[j]; });
        PriceSeries sorted;
        sorted.asset_id = s.asset_id;
        for (size_t i : idx) {
            sorted.dates.push_back(s.dates[i]);
            sorted.prices.push_back(s.prices[i]);
        }
        s = std::move(sorted);
        s.validate();
    }
    return result;
}

PriceSeries interpolate_gaps(const PriceSeries& series, const std::vector<Date>& calendar) {
    if (series.size() < 2) {
        throw std::runtime_error("series '" + series.asset_id +
                                 "': need >= 2 observed points to interpolate");
    }
    series.validate();
    if (calendar.empty()) throw std::runtime_error("empty calendar");
    if (calendar.front() < series.dates.front() || series.dates.back() < calendar.back()) {
        throw std::runtime_error("series '" + series.asset_id +
                                 "': calendar extends past the observed range (" +
                                 calendar.front().to_string() + ".." + calendar.back().to_string() +
                                 " vs " + series.dates.front().to_string() + ".." +
                                 series.dates.back().to_string() + "); no extrapolation");
    }

    PriceSeries out;
    out.asset_id = series.asset_id;
    out.dates = calendar;
    out.prices.reserve(calendar.size());

    size_t k = 0;  // index of first observation with date >= current calendar date
    for (const Date& d : calendar) {
        while (k < series.size() && series.dates[k] < d) ++k;
        if (k < series.size() && series.dates[k] == d) {
            out.prices.push_back(series.prices[k]);  // observed values pass through bit-exactly
            continue;
        }
        // d lies strictly between observations k-1 and k.
        const Date a = series.dates[k - 1];
        const Date b = series.dates[k];
        const double pa = series.prices[k - 1];
        const double pb = series.prices[k];
        const double frac = static_cast<double>(d - a) / static_cast<double>(b - a);
        out.prices.push_back(pa + (pb - pa) * frac);
    }
    out.validate();
    return out;
}

ReturnSeries log_returns(const PriceSeries& series) {
    if (series.size() < 2) {
        throw std::runtime_error("series '" + series.asset_id + "': need >= 2 points for returns");
    }
    ReturnSeries out;
    out.asset_id = series.asset_id;
    out.dates.assign(series.dates.begin() + 1, series.dates.end());
    out.returns.reserve(series.size() - 1);
    for (size_t i = 0; i + 1 < series.size(); ++i) {
        if (!(series.prices[i] > 0.0) || !(series.prices[i + 1] > 0.0)) {
            throw std::runtime_error("series '" + series.asset_id + "': non-positive price at " +
                                     series.dates[i + 1].to_string());
        }
        out.returns.push_back(std::log(series.prices[i + 1] / series.prices[i]));
    }
    return out;
}

Panel build_panel(const std::vector<PriceSeries>& series) {
    if (series.empty()) throw std::runtime_error("no series to assemble");
    std::set<std::int64_t> union_dates;
    Date overlap_lo(series[0].dates.front());
    Date overlap_hi(series[0].dates.back());
    for (const auto& s : series) {
        if (s.size() < 2) {
            throw std::runtime_error("series '" + s.asset_id + "' has fewer than 2 observations");
        }
        for (const Date& d : s.dates) union_dates.insert(d.serial());
        overlap_lo = std::max(overlap_lo, s.dates.front());
        overlap_hi = std::min(overlap_hi, s.dates.back());
    }
    if (!(overlap_lo < overlap_hi)) {
        throw std::runtime_error("assets have no common overlapping window");
    }

    std::vector<Date> calendar;
    for (std::int64_t serial : union_dates) {
        Date d(serial);
        if (overlap_lo <= d && d <= overlap_hi) calendar.push_back(d);
    }

    Panel panel;
    panel.dates = calendar;
    for (const auto& s : series) {
        const auto filled = interpolate_gaps(s, calendar);
        panel.asset_ids.push_back(s.asset_id);
        panel.prices.push_back(filled.prices);
    }
    return panel;
}

void write_panel_csv(const Panel& panel, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << "date";
    for (const auto& id : panel.asset_ids) out << ',' << id;
    out << '\n';
    for (size_t t = 0; t < panel.n_dates(); ++t) {
        out << panel.dates[t].to_string();
        for (size_t a = 0; a < panel.n_assets(); ++a) out << ',' << fmt_g9(panel.prices[a][t]);
        out << '\n';
    }
}

Panel read_panel_csv(const std::string& path) {
    const auto loaded = load_prices(path);
    return build_panel(loaded.series);
}

}  // namespace jumpvar
