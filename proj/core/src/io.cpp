#include "grassmoduli/io.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include <json.hpp>

namespace grassmoduli::io {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json partition_json(const Partition& lambda) {
  ordered_json arr = ordered_json::array();
  for (int part : lambda.parts()) arr.push_back(part);
  return arr;
}

ordered_json int_vector_json(const std::vector<int>& values) {
  ordered_json arr = ordered_json::array();
  for (int v : values) arr.push_back(v);
  return arr;
}

ordered_json weight_json(const CenterWeight& w) {
  ordered_json obj;
  obj["num"] = w.numerator().str();
  obj["den"] = w.denominator().str();
  return obj;
}

ordered_json component_json(const RectSquareComponent& component) {
  ordered_json obj;
  obj["i"] = int_vector_json(component.i);
  obj["j"] = int_vector_json(component.j);
  obj["partition"] = partition_json(component.partition);
  obj["fund"] = int_vector_json(component.fund.coeffs);
  return obj;
}

std::string dump(const ordered_json& value, int indent) {
  return indent >= 0 ? value.dump(indent) : value.dump();
}

std::string csv_quote(const std::string& value) { return '"' + value + '"'; }

std::string join_partitions(const std::vector<Partition>& partitions) {
  std::string out;
  for (std::size_t i = 0; i < partitions.size(); ++i) {
    if (i) out += ';';
    out += partitions[i].to_string();
  }
  return out;
}

}  // namespace

std::string to_json(const SchurExpansion& expansion, int indent) {
  ordered_json arr = ordered_json::array();
  for (const auto& [lambda, coeff] : expansion.terms()) {
    ordered_json term;
    term["partition"] = partition_json(lambda);
    term["coeff"] = coeff.str();
    arr.push_back(std::move(term));
  }
  return dump(arr, indent);
}

std::string to_json(const RectSquareComponent& component, int indent) {
  return dump(component_json(component), indent);
}

std::string to_json(const std::vector<ComponentReport>& reports, int indent) {
  ordered_json arr = ordered_json::array();
  for (const auto& report : reports) {
    ordered_json obj = component_json(report.component);
    obj["parity"] = to_string(report.parity);
    obj["dim"] = report.dimension.str();
    obj["center_weight"] = weight_json(report.center_weight);
    obj["gs_flag"] = report.passes_gs_filter;
    arr.push_back(std::move(obj));
  }
  return dump(arr, indent);
}

std::string to_json(const ModuliReport& report, int indent) {
  ordered_json obj;
  obj["p"] = report.p;
  obj["q"] = report.q;
  obj["k"] = report.k;
  obj["dim_H0"] = report.dim_H0.str();
  obj["dim_sym_square"] = report.dim_sym_square.str();
  obj["dim_F2k"] = report.dim_F2k.str();
  obj["dim_Vk"] = report.dim_Vk.str();
  obj["N"] = report.N.str();
  obj["dim_image_moduli"] = report.dim_image_moduli.str();
  ordered_json comps = ordered_json::array();
  for (const auto& lambda : report.gs_sym_components)
    comps.push_back(partition_json(lambda));
  obj["gs_sym_components"] = std::move(comps);
  ordered_json flags;
  flags["routes_agree"] = report.flags.routes_agree;
  flags["gs_singleton"] = report.flags.gs_singleton;
  flags["skew_label_matches_paper"] = report.flags.skew_label_matches_paper;
  obj["flags"] = std::move(flags);
  return dump(obj, indent);
}

std::string rewrite_json(const std::string& text, int indent) {
  return dump(ordered_json::parse(text), indent);
}

std::string to_csv(const std::vector<ComponentReport>& reports) {
  std::string out = "partition,fund,i,j,parity,dim,center_weight,gs_flag\n";
  for (const auto& r : reports) {
    std::string i_text, j_text;
    for (std::size_t a = 0; a < r.component.i.size(); ++a) {
      if (a) i_text += ',';
      i_text += std::to_string(r.component.i[a]);
    }
    for (std::size_t a = 0; a < r.component.j.size(); ++a) {
      if (a) j_text += ',';
      j_text += std::to_string(r.component.j[a]);
    }
    out += csv_quote(r.component.partition.to_string()) + ',';
    out += csv_quote(r.component.fund.to_string()) + ',';
    out += csv_quote(i_text) + ',';
    out += csv_quote(j_text) + ',';
    out += to_string(r.parity) + ',';
    out += r.dimension.str() + ',';
    out += r.center_weight.to_string() + ',';
    out += r.passes_gs_filter ? "true" : "false";
    out += '\n';
  }
  return out;
}

std::string to_csv(const ModuliReport& r) {
  std::string out =
      "p,q,k,dim_H0,dim_sym_square,dim_F2k,dim_Vk,N,dim_image_moduli,"
      "gs_sym_components,routes_agree,gs_singleton,skew_label_matches_paper\n";
  out += std::to_string(r.p) + ',' + std::to_string(r.q) + ',' +
         std::to_string(r.k) + ',';
  out += r.dim_H0.str() + ',' + r.dim_sym_square.str() + ',' +
         r.dim_F2k.str() + ',' + r.dim_Vk.str() + ',' + r.N.str() + ',' +
         r.dim_image_moduli.str() + ',';
  out += csv_quote(join_partitions(r.gs_sym_components)) + ',';
  out += std::string(r.flags.routes_agree ? "true" : "false") + ',';
  out += std::string(r.flags.gs_singleton ? "true" : "false") + ',';
  out += r.flags.skew_label_matches_paper ? "true" : "false";
  out += '\n';
  return out;
}

namespace {

std::string pad(const std::string& text, std::size_t width) {
  std::string out = text;
  while (out.size() < width) out += ' ';
  return out;
}

}  // namespace

std::string to_table(const std::vector<ComponentReport>& reports) {
  std::vector<std::array<std::string, 8>> rows;
  rows.push_back({"partition", "fund", "i", "j", "parity", "dim", "weight",
                  "gs"});
  for (const auto& r : reports) {
    std::string i_text, j_text;
    for (std::size_t a = 0; a < r.component.i.size(); ++a) {
      if (a) i_text += ',';
      i_text += std::to_string(r.component.i[a]);
    }
    for (std::size_t a = 0; a < r.component.j.size(); ++a) {
      if (a) j_text += ',';
      j_text += std::to_string(r.component.j[a]);
    }
    rows.push_back({r.component.partition.to_string(),
                    r.component.fund.to_string(), i_text, j_text,
                    to_string(r.parity), r.dimension.str(),
                    r.center_weight.to_string(),
                    r.passes_gs_filter ? "yes" : "no"});
  }
  std::array<std::size_t, 8> widths{};
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c)
      widths[c] = std::max(widths[c], row[c].size());
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += "  ";
      out += c + 1 == row.size() ? row[c] : pad(row[c], widths[c]);
    }
    out += '\n';
  }
  return out;
}

std::string to_table(const ModuliReport& r) {
  std::ostringstream out;
  out << "p: " << r.p << '\n';
  out << "q: " << r.q << '\n';
  out << "k: " << r.k << '\n';
  out << "dim H0(O(k)): " << r.dim_H0 << '\n';
  out << "dim S^2: " << r.dim_sym_square << '\n';
  out << "dim F(2k w_q): " << r.dim_F2k << '\n';
  out << "dim V_k: " << r.dim_Vk << '\n';
  out << "N = dim V_k - 2: " << r.N << '\n';
  out << "dim image moduli (dim V_k - 1): " << r.dim_image_moduli << '\n';
  out << "GS sym components: ";
  for (std::size_t i = 0; i < r.gs_sym_components.size(); ++i) {
    if (i) out << ' ';
    out << '[' << r.gs_sym_components[i].to_string() << ']';
  }
  out << '\n';
  out << "routes_agree: " << (r.flags.routes_agree ? "true" : "false") << '\n';
  out << "gs_singleton: " << (r.flags.gs_singleton ? "true" : "false") << '\n';
  out << "skew_label_matches_paper: "
      << (r.flags.skew_label_matches_paper ? "true" : "false") << '\n';
  for (const auto& note : r.notes) out << "note: " << note << '\n';
  return out.str();
}

}  // namespace grassmoduli::io
