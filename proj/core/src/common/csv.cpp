#include "dralns/common/csv.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dralns {

std::string format_real(double value) {
  if (value == 0.0) {
    return "0";  // folds -0
  }
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc{}) {
    throw std::runtime_error("format_real: conversion failed");
  }
  return std::string(buf.data(), ptr);
}

void CsvWriter::header(const std::vector<std::string>& columns) {
  for (const auto& c : columns) {
    field(std::string_view(c));
  }
  end_row();
}

void CsvWriter::separator() {
  if (!first_in_row_) {
    out_ << ',';
  }
  first_in_row_ = false;
}

CsvWriter& CsvWriter::field(std::string_view text) {
  separator();
  out_ << text;
  return *this;
}

CsvWriter& CsvWriter::field(double value) {
  separator();
  out_ << format_real(value);
  return *this;
}

CsvWriter& CsvWriter::field(long long value) {
  separator();
  out_ << value;
  return *this;
}

CsvWriter& CsvWriter::field(unsigned long long value) {
  separator();
  out_ << value;
  return *this;
}

void CsvWriter::end_row() {
  out_ << '\n';
  first_in_row_ = true;
}

std::size_t CsvTable::column(std::string_view name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == name) {
      return i;
    }
  }
  throw std::out_of_range("csv: no column named " + std::string(name));
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    out.push_back(cell);
  }
  if (!line.empty() && line.back() == ',') {
    out.emplace_back();
  }
  return out;
}

}  // namespace

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open " + path);
  }
  CsvTable table;
  std::string line;
  if (!std::getline(in, line)) {
    return table;
  }
  table.columns = split_line(line);
  while (std::getline(in, line)) {
    if (line.empty()) {
      continue;
    }
    auto row = split_line(line);
    if (row.size() != table.columns.size()) {
      throw std::runtime_error(path + ": ragged row");
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace dralns
