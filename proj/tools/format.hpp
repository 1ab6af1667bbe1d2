#pragma once

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "pdm/ambiguity.hpp"
#include "pdm/errors.hpp"

namespace pdmspec {

/// Printed with 17 significant digits so that re-parsing reproduces the
/// exact double (round-trip requirement for every CSV/JSON export).
inline std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string g12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

class IoError : public pdm::Error {
public:
  using Error::Error;
};

/// Writes to --out PATH or stdout. File problems surface with path context.
class OutputSink {
public:
  explicit OutputSink(const std::string& path) : path_(path) {
    if (!path_.empty()) {
      file_.open(path_);
      if (!file_) throw IoError("cannot open output file: " + path_);
    }
  }

  std::ostream& stream() { return path_.empty() ? std::cout : file_; }

  void finish() {
    stream().flush();
    if (!path_.empty() && !file_) throw IoError("write failed: " + path_);
  }

private:
  std::string path_;
  std::ofstream file_;
};

/// Simple aligned-column or delimited table writer. CSV mode prefixes the
/// header with '#' so the files feed gnuplot directly.
class TableWriter {
public:
  TableWriter(std::vector<std::string> header, std::string format, std::string delim)
      : header_(std::move(header)), format_(std::move(format)),
        delim_(delim == "comma" ? "," : " ") {}

  void row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }

  void write(std::ostream& os) const {
    if (format_ == "csv") {
      os << "#";
      for (std::size_t i = 0; i < header_.size(); ++i) {
        os << (i == 0 ? " " : delim_) << header_[i];
      }
      os << "\n";
      for (const auto& r : rows_) {
        for (std::size_t i = 0; i < r.size(); ++i) {
          if (i) os << delim_;
          os << r[i];
        }
        os << "\n";
      }
      return;
    }
    // aligned text table
    std::vector<std::size_t> width(header_.size());
    for (std::size_t i = 0; i < header_.size(); ++i) width[i] = header_[i].size();
    for (const auto& r : rows_) {
      for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
    }
    auto emit = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) os << "  ";
        os << cells[i];
        for (std::size_t p = cells[i].size(); p < width[i]; ++p) os << ' ';
      }
      os << "\n";
    };
    emit(header_);
    for (const auto& r : rows_) emit(r);
  }

private:
  std::vector<std::string> header_;
  std::string format_;
  std::string delim_;
  std::vector<std::vector<std::string>> rows_;
};

/// Exact rational string when available, otherwise the 17-digit double.
inline std::string exact_or_g17(const std::optional<pdm::Rational>& r, double v) {
  return r ? r->str() : g17(v);
}

}  // namespace pdmspec
