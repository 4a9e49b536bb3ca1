#include "ultra/render.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "ultra/error.hpp"

namespace ultra {

namespace {

constexpr int kLeafSpacingPx = 40;
constexpr int kHeightScalePx = 40;
constexpr int kMarginPx = 20;
constexpr int kLabelBandPx = 20;
constexpr int kAsciiColumnWidth = 4;

std::string px(const Rational& value) { return value.decimal_str(4); }

std::string svg_line(const Rational& x1, const Rational& y1, const Rational& x2,
                     const Rational& y2) {
  return "<line x1=\"" + px(x1) + "\" y1=\"" + px(y1) + "\" x2=\"" + px(x2) + "\" y2=\"" +
         px(y2) + "\"/>\n";
}

std::string render_svg(const Layout& layout) {
  const Rational spacing(kLeafSpacingPx);
  const Rational scale(kHeightScalePx);
  const Rational margin(kMarginPx);
  const std::size_t n = layout.leaves.size();

  const Rational base_y = margin + scale * layout.top_height;
  const Rational width = margin * Rational(2) + spacing * Rational(BigInt(n - 1), BigInt(1));
  const Rational height = base_y + Rational(kLabelBandPx) + margin;

  auto x_px = [&](const Rational& units) { return margin + spacing * units; };
  auto y_px = [&](const Rational& h) { return base_y - scale * h; };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + px(width) + "\" height=\"" +
         px(height) + "\" viewBox=\"0 0 " + px(width) + " " + px(height) + "\">\n";
  out += "<!-- crossings: " + std::to_string(layout.crossings) + " -->\n";
  out += "<!-- geometry: leaf-spacing " + std::to_string(kLeafSpacingPx) +
         "px, height-scale " + std::to_string(kHeightScalePx) + "px/unit, margin " +
         std::to_string(kMarginPx) + "px -->\n";
  out += "<g stroke=\"black\" stroke-width=\"2\" fill=\"none\">\n";
  if (layout.bars.empty()) {
    // Single leaf: a bare tick.
    out += svg_line(x_px(Rational(0)), base_y, x_px(Rational(0)), base_y - Rational(8));
  }
  for (const auto& bar : layout.bars) {
    out += svg_line(x_px(bar.x_min), y_px(bar.height), x_px(bar.x_max), y_px(bar.height));
    for (const auto& drop : bar.drops)
      out += svg_line(x_px(drop.x), y_px(bar.height), x_px(drop.x), y_px(drop.from_height));
  }
  out += "</g>\n";
  out += "<g font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\">\n";
  for (const auto& leaf : layout.leaves)
    out += "<text x=\"" + px(x_px(Rational(BigInt(leaf.rank), BigInt(1)))) + "\" y=\"" +
           px(base_y + Rational(16)) + "\">" + leaf.label + "</text>\n";
  out += "</g>\n</svg>\n";
  return out;
}

class AsciiGrid {
 public:
  AsciiGrid(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), cells_(rows * cols, ' ') {}

  // '-' across '|' (and vice versa) becomes a '+' junction.
  void put(std::size_t row, std::size_t col, char glyph) {
    char& cell = cells_[row * cols_ + col];
    if (cell == ' ' || cell == glyph) {
      cell = glyph;
    } else {
      cell = '+';
    }
  }

  void text(std::size_t row, std::size_t col, const std::string& s) {
    for (std::size_t i = 0; i < s.size() && col + i < cols_; ++i)
      cells_[row * cols_ + col + i] = s[i];
  }

  // Rows are emitted top first; row 0 is the bottom (label) row.
  std::string str() const {
    std::string out;
    for (std::size_t r = rows_; r-- > 0;) {
      std::string line(cells_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                       cells_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out += line + "\n";
    }
    return out;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<char> cells_;
};

std::size_t ascii_col(const Rational& x_units) {
  // floor(x * column width)
  const Rational scaled = x_units * Rational(kAsciiColumnWidth);
  return static_cast<std::size_t>(scaled.numerator() / scaled.denominator());
}

std::string render_ascii(const Layout& layout) {
  std::map<Rational, std::size_t> level_of;  // height -> 1-based level
  for (const auto& bar : layout.bars) level_of.emplace(bar.height, 0);
  {
    std::size_t level = 1;
    for (auto& [h, l] : level_of) l = level++;
  }
  const std::size_t levels = level_of.size();

  std::size_t cols = 1;
  for (const auto& leaf : layout.leaves)
    cols = std::max(cols, leaf.rank * kAsciiColumnWidth + leaf.label.size() + 1);
  const std::size_t rows = 2 * levels + (levels == 0 ? 2 : 1);
  AsciiGrid grid(rows, cols);

  if (layout.bars.empty()) {
    grid.put(1, 0, '|');  // single leaf tick
  }
  for (const auto& bar : layout.bars) {
    const std::size_t bar_row = 2 * level_of.at(bar.height);
    const std::size_t lo = ascii_col(bar.x_min);
    const std::size_t hi = ascii_col(bar.x_max);
    for (std::size_t c = lo; c <= hi; ++c) grid.put(bar_row, c, '-');
    for (const auto& drop : bar.drops) {
      const std::size_t col = ascii_col(drop.x);
      grid.put(bar_row, col, '+');
      const std::size_t child_row =
          drop.from_height.is_zero() ? 0 : 2 * level_of.at(drop.from_height);
      for (std::size_t r = child_row + 1; r < bar_row; ++r) grid.put(r, col, '|');
    }
  }
  for (const auto& leaf : layout.leaves)
    grid.text(0, leaf.rank * kAsciiColumnWidth, leaf.label);

  return "# crossings: " + std::to_string(layout.crossings) + "\n" + grid.str();
}

}  // namespace

Layout compute_layout(const Dendrogram& dendro, const std::vector<std::string>& leaf_order) {
  const auto report = contiguity_violations(dendro, leaf_order);  // validates coverage too

  std::unordered_map<std::string_view, std::size_t> rank_of;
  for (std::size_t r = 0; r < leaf_order.size(); ++r) rank_of.emplace(leaf_order[r], r);

  Layout layout;
  layout.crossings = report.count();
  layout.top_height = dendro.root_height();
  for (std::size_t r = 0; r < leaf_order.size(); ++r)
    layout.leaves.push_back(Layout::Leaf{leaf_order[r], r});

  std::vector<Rational> attach(dendro.node_count());
  std::vector<std::pair<std::size_t, std::size_t>> stack{{dendro.root(), 0}};
  while (!stack.empty()) {
    auto& [v, slot] = stack.back();
    const auto& node = dendro.node(v);
    if (slot < node.children.size()) {
      stack.emplace_back(node.children[slot++], 0);
      continue;
    }
    if (node.is_leaf()) {
      attach[v] = Rational(BigInt(rank_of.at(node.label)), BigInt(1));
    } else {
      Layout::Bar bar;
      bar.height = node.height;
      bar.x_min = attach[node.children.front()];
      bar.x_max = bar.x_min;
      for (std::size_t c : node.children) {
        bar.x_min = min(bar.x_min, attach[c]);
        bar.x_max = max(bar.x_max, attach[c]);
        bar.drops.push_back(Layout::Drop{attach[c], dendro.node(c).height});
      }
      std::sort(bar.drops.begin(), bar.drops.end(),
                [](const Layout::Drop& a, const Layout::Drop& b) { return a.x < b.x; });
      attach[v] = midpoint(bar.x_min, bar.x_max);
      layout.bars.push_back(std::move(bar));
    }
    stack.pop_back();
  }

  std::sort(layout.bars.begin(), layout.bars.end(), [](const Layout::Bar& a, const Layout::Bar& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.x_min < b.x_min;
  });
  return layout;
}

std::string render(const Dendrogram& dendro, const std::vector<std::string>& leaf_order,
                   RenderFormat format) {
  const Layout layout = compute_layout(dendro, leaf_order);
  return format == RenderFormat::svg ? render_svg(layout) : render_ascii(layout);
}

std::string render(const UltrametricSpace& space, const Ordering& ord, RenderFormat format) {
  if (ord.size() != space.size())
    throw Error(errc::invalid_sequence, "order must cover all points exactly once");
  std::vector<std::string> leaf_order;
  leaf_order.reserve(ord.size());
  for (std::size_t p : ord.points) {
    if (p >= space.size())
      throw Error(errc::invalid_sequence, "point index out of range", {p});
    leaf_order.push_back(space.label(p));
  }
  return render(dendrogram_of(space), leaf_order, format);
}

}  // namespace ultra
