#include "dynfield/svg.hpp"

#include <iomanip>
#include <sstream>

namespace dynfield::svg {

namespace {

constexpr double kSide = 240.0;
constexpr double kMargin = 24.0;

std::string num(double v) {
  std::ostringstream out;
  out << std::setprecision(12) << v;
  return out.str();
}

std::string fill_for(symbolic::RuleKind kind) {
  switch (kind) {
    case symbolic::RuleKind::kPredict: return "#999999";
    case symbolic::RuleKind::kAttach: return "#000000";
    case symbolic::RuleKind::kMachine: return "#555555";
    case symbolic::RuleKind::kOther: return "#cccccc";
  }
  return "#cccccc";
}

// Unit-square rectangle drawn closed, y axis pointing up.
void rect(std::ostringstream& out, double x0, const goedel::Rect& r, const std::string& fill,
          const std::string& extra = "") {
  const double x = x0 + to_double(r.x_lo()) * kSide;
  const double y = kMargin + (1.0 - to_double(r.y_hi())) * kSide;
  out << "  <rect x=\"" << num(x) << "\" y=\"" << num(y) << "\" width=\""
      << num(to_double(r.width()) * kSide) << "\" height=\""
      << num(to_double(r.height()) * kSide) << "\" fill=\"" << fill << "\"" << extra
      << "/>\n";
}

void frame(std::ostringstream& out, double x0, const goedel::GoedelCoding& coding) {
  out << "  <rect x=\"" << num(x0) << "\" y=\"" << num(kMargin) << "\" width=\""
      << num(kSide) << "\" height=\"" << num(kSide)
      << "\" fill=\"#ffffff\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
  for (const auto& cell : goedel::background_partition(coding)) {
    rect(out, x0, cell, "none", " stroke=\"#bbbbbb\" stroke-width=\"0.5\"");
  }
}

void header(std::ostringstream& out, double width, double height) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width)
      << "\" height=\"" << num(height) << "\" viewBox=\"0 0 " << num(width) << " "
      << num(height) << "\">\n";
}

}  // namespace

std::string render_partition(const goedel::NdaMachine& m, Panel panel) {
  std::ostringstream out;
  const double width = kSide + 2 * kMargin + 120.0;
  header(out, width, kSide + 2 * kMargin);
  out << "  <text x=\"" << num(kMargin) << "\" y=\"16\" font-size=\"12\">"
      << (panel == Panel::kDomains ? "domains of dependence" : "domains of effect")
      << "</text>\n";
  frame(out, kMargin, m.coding());
  for (const auto& e : goedel::dod_doe_report(m)) {
    rect(out, kMargin, panel == Panel::kDomains ? e.cell : e.image, fill_for(e.kind),
         panel == Panel::kEffects ? " fill-opacity=\"0.6\"" : "");
  }
  const double lx = 2 * kMargin + kSide;
  const char* names[] = {"identity", "predict", "attach", "machine"};
  const char* fills[] = {"#ffffff", "#999999", "#000000", "#555555"};
  for (int i = 0; i < 4; ++i) {
    const double y = kMargin + 20.0 * i;
    out << "  <rect x=\"" << num(lx) << "\" y=\"" << num(y)
        << "\" width=\"12\" height=\"12\" fill=\"" << fills[i]
        << "\" stroke=\"#000000\" stroke-width=\"0.5\"/>\n";
    out << "  <text x=\"" << num(lx + 18) << "\" y=\"" << num(y + 10)
        << "\" font-size=\"11\">" << names[i] << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_orbit(const goedel::NdaMachine& m,
                         const std::vector<dfa::RectMacrostate>& orbit) {
  std::ostringstream out;
  const double step = kSide + kMargin;
  header(out, kMargin + step * static_cast<double>(orbit.size()), kSide + 2 * kMargin);
  for (std::size_t t = 0; t < orbit.size(); ++t) {
    const double x0 = kMargin + step * static_cast<double>(t);
    out << "  <text x=\"" << num(x0) << "\" y=\"16\" font-size=\"12\">t = " << t
        << ", u = " << display(orbit[t].weight) << "</text>\n";
    frame(out, x0, m.coding());
    rect(out, x0, orbit[t].support, "#000000");
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace dynfield::svg
