#include "curveatlas/atlas.hpp"

#include <map>
#include <sstream>

#include <json.hpp>

namespace curveatlas {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string evidence_kind(const Verdict& v) {
  if (v.status == Status::NonEmpty) return to_string(v.witness->kind);
  if (v.status == Status::Empty) return to_string(v.obstruction->kinds.front());
  return "";
}

std::string evidence_citation(const Verdict& v) {
  if (v.status == Status::NonEmpty) return v.witness->citation;
  if (v.status == Status::Empty) return v.obstruction->citation;
  return "";
}

ordered_json evidence_json(const Verdict& v) {
  ordered_json e;
  if (v.status == Status::NonEmpty) {
    e["kind"] = to_string(v.witness->kind);
    e["params"] = ordered_json::object();
    for (const auto& [k, val] : v.witness->params) e["params"][k] = val;
    e["citation"] = v.witness->citation;
  } else if (v.status == Status::Empty) {
    std::string kinds;
    for (const auto& k : v.obstruction->kinds) {
      if (!kinds.empty()) kinds += '+';
      kinds += to_string(k);
    }
    e["kind"] = kinds;
    e["params"] = ordered_json::object();
    for (const auto& [k, val] : v.obstruction->params) e["params"][k] = val;
    e["citation"] = v.obstruction->citation;
  } else {
    e["kind"] = "";
    e["params"] = ordered_json::object();
    e["citation"] = "";
  }
  return e;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

struct SvgStyle {
  std::string fill;
  std::string shape;  // "rect" | "circle" | "cross"
};

std::string render_svg(const AtlasGrid& grid, const std::string& title,
                       const std::vector<std::pair<std::string, SvgStyle>>& legend,
                       const std::map<std::string, SvgStyle>& styles,
                       const std::vector<std::pair<AtlasCell, std::string>>& marks) {
  const i64 cell = 16, margin = 60;
  const i64 w = margin * 2 + (grid.r_max - grid.r_min + 1) * cell;
  const i64 h = margin * 2 + (grid.g_max - grid.g_min + 1) * cell + 30 * static_cast<i64>(legend.size());
  auto px = [&](i64 r) { return margin + (r - grid.r_min) * cell; };
  auto py = [&](i64 g) { return margin + (grid.g_max - g) * cell; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
     << "\">\n";
  os << "<text x=\"" << margin << "\" y=\"24\" font-size=\"16\">" << title << "</text>\n";
  os << "<text x=\"" << w / 2 << "\" y=\"" << margin + (grid.g_max - grid.g_min + 1) * cell + 32
     << "\" font-size=\"12\">r</text>\n";
  os << "<text x=\"12\" y=\"" << margin + (grid.g_max - grid.g_min) * cell / 2
     << "\" font-size=\"12\">g</text>\n";
  for (i64 r = grid.r_min; r <= grid.r_max; ++r)
    os << "<text x=\"" << px(r) << "\" y=\"" << margin + (grid.g_max - grid.g_min + 1) * cell + 16
       << "\" font-size=\"9\">" << r << "</text>\n";
  for (i64 g = grid.g_min; g <= grid.g_max; g += 5)
    os << "<text x=\"" << margin - 24 << "\" y=\"" << py(g) + 4 << "\" font-size=\"9\">" << g
       << "</text>\n";

  auto draw = [&](i64 x, i64 y, const SvgStyle& st) {
    if (st.shape == "rect") {
      os << "<rect x=\"" << x - 5 << "\" y=\"" << y - 5
         << "\" width=\"10\" height=\"10\" fill=\"" << st.fill << "\"/>\n";
    } else if (st.shape == "circle") {
      os << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"5\" fill=\"" << st.fill
         << "\"/>\n";
    } else {
      os << "<path d=\"M" << x - 4 << ' ' << y - 4 << " L" << x + 4 << ' ' << y + 4 << " M"
         << x - 4 << ' ' << y + 4 << " L" << x + 4 << ' ' << y - 4 << "\" stroke=\"" << st.fill
         << "\" stroke-width=\"2\"/>\n";
    }
  };

  for (const auto& [c, key] : marks) draw(px(c.r), py(c.g), styles.at(key));

  i64 ly = margin + (grid.g_max - grid.g_min + 1) * cell + 48;
  for (const auto& [label, st] : legend) {
    draw(margin + 6, ly - 4, st);
    os << "<text x=\"" << margin + 18 << "\" y=\"" << ly << "\" font-size=\"11\">" << label
       << "</text>\n";
    ly += 22;
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace

AtlasGrid build_atlas(i64 alpha, i64 r_min, i64 r_max, i64 g_min, i64 g_max) {
  AtlasGrid grid{alpha, r_min, r_max, g_min, g_max, {}};
  for (i64 r = r_min; r <= r_max; ++r) {
    for (i64 g = g_min; g <= g_max; ++g) {
      AtlasCell cell;
      cell.r = r;
      cell.g = g;
      cell.d = g + r - alpha;
      if (alpha == 5) {
        cell.verdict = classify_alpha5(r, g);
        cell.irreducibility = irreducibility_alpha5(r, g);
      } else {
        cell.verdict = classify_general(alpha, r, g);
        if (cell.verdict.status == Status::Empty)
          cell.irreducibility = {Irreducibility::Empty, std::nullopt, "mirrors the existence table"};
        else
          cell.irreducibility = {Irreducibility::Unknown, std::nullopt, ""};
      }
      grid.cells.push_back(std::move(cell));
    }
  }
  return grid;
}

AtlasGrid build_atlas(i64 alpha, i64 r_max) { return build_atlas(alpha, 3, r_max, 6, 49); }

std::string atlas_existence_csv(const AtlasGrid& grid) {
  std::ostringstream os;
  os << "r,g,d,alpha,status,irreducibility,evidence_kind,citation\n";
  for (const auto& c : grid.cells)
    os << c.r << ',' << c.g << ',' << c.d << ',' << grid.alpha << ','
       << to_string(c.verdict.status) << ',' << to_string(c.irreducibility.value) << ','
       << evidence_kind(c.verdict) << ',' << csv_escape(evidence_citation(c.verdict)) << '\n';
  return os.str();
}

std::string atlas_irreducibility_csv(const AtlasGrid& grid) {
  std::ostringstream os;
  os << "r,g,d,alpha,status,irreducibility,evidence_kind,citation\n";
  for (const auto& c : grid.cells)
    os << c.r << ',' << c.g << ',' << c.d << ',' << grid.alpha << ','
       << to_string(c.verdict.status) << ',' << to_string(c.irreducibility.value) << ','
       << evidence_kind(c.verdict) << ',' << csv_escape(c.irreducibility.citation) << '\n';
  return os.str();
}

namespace {

ordered_json grid_json(const AtlasGrid& grid, bool irreducibility_citation) {
  ordered_json j;
  j["alpha"] = grid.alpha;
  j["r_range"] = {grid.r_min, grid.r_max};
  j["g_range"] = {grid.g_min, grid.g_max};
  j["cells"] = ordered_json::array();
  for (const auto& c : grid.cells) {
    ordered_json cj;
    cj["r"] = c.r;
    cj["g"] = c.g;
    cj["d"] = c.d;
    cj["alpha"] = grid.alpha;
    cj["status"] = to_string(c.verdict.status);
    cj["irreducibility"] = to_string(c.irreducibility.value);
    if (c.irreducibility.component_count)
      cj["component_count"] = *c.irreducibility.component_count;
    cj["evidence"] = evidence_json(c.verdict);
    if (irreducibility_citation) cj["irreducibility_citation"] = c.irreducibility.citation;
    j["cells"].push_back(std::move(cj));
  }
  return j;
}

}  // namespace

std::string atlas_existence_json(const AtlasGrid& grid) {
  return grid_json(grid, false).dump(2) + "\n";
}

std::string atlas_irreducibility_json(const AtlasGrid& grid) {
  return grid_json(grid, true).dump(2) + "\n";
}

std::string atlas_existence_svg(const AtlasGrid& grid) {
  const std::map<std::string, SvgStyle> styles = {
      {"Empty", {"#d65a5a", "cross"}},
      {"NonEmpty", {"#2c7fb8", "circle"}},
      {"Unknown", {"#bdbdbd", "rect"}},
  };
  std::vector<std::pair<AtlasCell, std::string>> marks;
  for (const auto& c : grid.cells) marks.emplace_back(c, to_string(c.verdict.status));
  return render_svg(grid, "Existence of linearly normal curves, alpha = " + std::to_string(grid.alpha),
                    {{"empty", styles.at("Empty")},
                     {"non-empty", styles.at("NonEmpty")},
                     {"undecided", styles.at("Unknown")}},
                    styles, marks);
}

std::string atlas_irreducibility_svg(const AtlasGrid& grid) {
  const std::map<std::string, SvgStyle> styles = {
      {"Irreducible", {"#2c7fb8", "rect"}},
      {"Reducible", {"#d65a5a", "circle"}},
      {"ExpectedDimComponentOnly", {"#41ab5d", "circle"}},
      {"MatchesHurwitz31", {"#756bb1", "rect"}},
      {"Unknown", {"#bdbdbd", "circle"}},
      {"Empty", {"#636363", "cross"}},
  };
  std::vector<std::pair<AtlasCell, std::string>> marks;
  for (const auto& c : grid.cells) marks.emplace_back(c, to_string(c.irreducibility.value));
  return render_svg(grid, "Irreducibility map, alpha = " + std::to_string(grid.alpha),
                    {{"irreducible", styles.at("Irreducible")},
                     {"reducible", styles.at("Reducible")},
                     {"component of expected dimension found", styles.at("ExpectedDimComponentOnly")},
                     {"components match the Hurwitz space of elliptic triple covers", styles.at("MatchesHurwitz31")},
                     {"non-empty, irreducibility open", styles.at("Unknown")},
                     {"empty", styles.at("Empty")}},
                    styles, marks);
}

std::string verdict_json(const Verdict& v, const IrreducibilityStatus& irr) {
  ordered_json j;
  j["d"] = v.triple.d;
  j["g"] = v.triple.g;
  j["r"] = v.triple.r;
  j["alpha"] = v.triple.alpha();
  j["status"] = to_string(v.status);
  j["evidence"] = evidence_json(v);
  j["irreducibility"] = to_string(irr.value);
  if (irr.component_count) j["component_count"] = *irr.component_count;
  j["irreducibility_citation"] = irr.citation;
  return j.dump(2) + "\n";
}

}  // namespace curveatlas
