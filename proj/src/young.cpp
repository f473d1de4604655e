#include "growth/young.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace growth {

namespace {

int ext(const std::vector<int>& v, int idx) {
  return idx < static_cast<int>(v.size()) ? v[idx] : 0;
}

std::vector<int> trim_zeros(std::vector<int> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

}  // namespace

YoungDiagram YoungDiagram::from_rows(std::vector<int> rows) {
  for (size_t k = 0; k < rows.size(); ++k) {
    if (rows[k] < 0) throw std::invalid_argument("diagram row length must be nonnegative");
    if (k > 0 && rows[k] > rows[k - 1])
      throw std::invalid_argument("diagram row lengths must be weakly decreasing");
  }
  YoungDiagram d;
  d.rows_ = trim_zeros(std::move(rows));
  return d;
}

YoungDiagram YoungDiagram::from_columns(std::vector<int> cols) {
  // validate, then conjugate
  YoungDiagram by_rows = from_rows(std::move(cols));
  return by_rows.transpose();
}

YoungDiagram YoungDiagram::from_rectangles(const std::vector<std::pair<int, int>>& rects) {
  int height = 0;
  for (auto [a, b] : rects) {
    if (a < 1 || b < 1) throw std::invalid_argument("rectangle sides must be >= 1");
    height = std::max(height, b);
  }
  std::vector<int> rows(height, 0);
  for (auto [a, b] : rects)
    for (int j = 0; j < b; ++j) rows[j] = std::max(rows[j], a);
  return from_rows(std::move(rows));
}

YoungDiagram YoungDiagram::rectangle(int a, int b) { return from_rectangles({{a, b}}); }

YoungDiagram YoungDiagram::staircase(int a, int b, int k) {
  if (a < 1 || b < 1 || k < 1) throw std::invalid_argument("staircase parameters must be >= 1");
  std::vector<int> rows(static_cast<size_t>(a) * k);
  for (int j = 0; j < a * k; ++j) rows[j] = b * (k - j / a);
  return from_rows(std::move(rows));
}

std::vector<int> YoungDiagram::columns() const {
  std::vector<int> cols(width(), 0);
  for (int i = 0; i < width(); ++i) {
    int cnt = 0;
    while (cnt < height() && rows_[cnt] > i) ++cnt;
    cols[i] = cnt;
  }
  return cols;
}

int YoungDiagram::row_length(int j) const {
  if (j < 0) throw std::invalid_argument("negative row index");
  return ext(rows_, j);
}

int YoungDiagram::column_length(int i) const {
  if (i < 0) throw std::invalid_argument("negative column index");
  int cnt = 0;
  while (cnt < height() && rows_[cnt] > i) ++cnt;
  return cnt;
}

long long YoungDiagram::cell_count() const {
  long long total = 0;
  for (int len : rows_) total += len;
  return total;
}

std::vector<Site> YoungDiagram::sites() const {
  std::vector<Site> out;
  out.reserve(static_cast<size_t>(cell_count()));
  for (int j = 0; j < height(); ++j)
    for (int i = 0; i < rows_[j]; ++i) out.push_back({i, j});
  return out;
}

bool YoungDiagram::contains(int i, int j) const {
  if (i < 0 || j < 0) throw std::invalid_argument("negative site coordinate");
  return j < height() && i < rows_[j];
}

bool YoungDiagram::contains_counts(LineCount row_cnt, LineCount col_cnt) const {
  if (row_cnt.inf || col_cnt.inf) return false;
  return contains(row_cnt.n, col_cnt.n);
}

bool YoungDiagram::subset_of(const YoungDiagram& other) const {
  if (height() > other.height()) return false;
  for (int j = 0; j < height(); ++j)
    if (rows_[j] > other.rows_[j]) return false;
  return true;
}

YoungDiagram YoungDiagram::union_with(const YoungDiagram& other) const {
  std::vector<int> rows(std::max(height(), other.height()));
  for (size_t j = 0; j < rows.size(); ++j)
    rows[j] = std::max(ext(rows_, static_cast<int>(j)), ext(other.rows_, static_cast<int>(j)));
  return from_rows(std::move(rows));
}

YoungDiagram YoungDiagram::intersect(const YoungDiagram& other) const {
  std::vector<int> rows(std::min(height(), other.height()));
  for (size_t j = 0; j < rows.size(); ++j)
    rows[j] = std::min(rows_[j], other.rows_[j]);
  return from_rows(std::move(rows));
}

YoungDiagram YoungDiagram::transpose() const { return from_rows(columns()); }

YoungDiagram YoungDiagram::reduce_left(int k) const {
  if (k < 0) throw std::invalid_argument("reduction amount must be nonnegative");
  std::vector<int> rows = rows_;
  for (int& len : rows) len = std::max(0, len - k);
  return from_rows(std::move(rows));
}

YoungDiagram YoungDiagram::reduce_down(int k) const {
  if (k < 0) throw std::invalid_argument("reduction amount must be nonnegative");
  if (k >= height()) return {};
  return from_rows({rows_.begin() + k, rows_.end()});
}

YoungDiagram YoungDiagram::shift_diag(int k) const { return reduce_left(k).reduce_down(k); }

int YoungDiagram::largest_square() const {
  int s = std::min(width(), height());
  while (s > 0 && rows_[s - 1] < s) --s;
  return s;
}

YoungDiagram boxplus(const YoungDiagram& x, const YoungDiagram& y) {
  if (x.empty()) return y;
  if (y.empty()) return x;
  const std::vector<int> cx = x.columns();
  const std::vector<int> cy = y.columns();
  const int w = static_cast<int>(cx.size() + cy.size());
  std::vector<int> out(w, std::numeric_limits<int>::max());
  for (int i = 0; i < w; ++i)
    for (int i1 = 0; i1 <= i; ++i1)
      out[i] = std::min(out[i], ext(cx, i1) + ext(cy, i - i1));
  return YoungDiagram::from_columns(std::move(out));
}

YoungDiagram boxminus(const YoungDiagram& z, const YoungDiagram& y) {
  const std::vector<int> cz = z.columns();
  const std::vector<int> cy = y.columns();
  const int w = static_cast<int>(cz.size());
  std::vector<int> out(w, 0);
  for (int i = 0; i < w; ++i)
    for (int i2 = 0; i + i2 < w; ++i2)
      out[i] = std::max(out[i], cz[i + i2] - ext(cy, i2));
  return YoungDiagram::from_columns(std::move(out));
}

YoungDiagram parse_diagram(const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  std::vector<int> rows;
  bool saw_empty = false;
  while (in >> tok) {
    if (tok == "empty") {
      saw_empty = true;
      continue;
    }
    size_t used = 0;
    int v;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad diagram token: '" + tok + "'");
    }
    if (used != tok.size()) throw std::invalid_argument("bad diagram token: '" + tok + "'");
    rows.push_back(v);
  }
  if (saw_empty && !rows.empty())
    throw std::invalid_argument("'empty' cannot be mixed with row lengths");
  return YoungDiagram::from_rows(std::move(rows));
}

std::string format_diagram(const YoungDiagram& d) {
  if (d.empty()) return "empty";
  std::string out;
  for (size_t k = 0; k < d.rows().size(); ++k) {
    if (k) out += ' ';
    out += std::to_string(d.rows()[k]);
  }
  return out;
}

}  // namespace growth
