#include "casimir/table.hpp"

#include <cstdio>
#include <ostream>

#include "casimir/errors.hpp"

namespace casimir {

TableFormat table_format_from_string(const std::string& s) {
    if (s == "csv") return TableFormat::csv;
    if (s == "json-lines" || s == "jsonl") return TableFormat::json_lines;
    throw ValidationError("unknown table format '" + s + "'");
}

std::string format_sci(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.8e", v);
    return buf;
}

std::size_t emit_table(const std::vector<Row>& rows, TableFormat fmt, std::ostream& out) {
    std::string text;
    if (fmt == TableFormat::csv) {
        text += "d_m,T_K,model,geometry,value,unit,m_terms,rel_err\n";
        for (const Row& r : rows) {
            text += format_sci(r.d_m) + ',' + format_sci(r.T_K) + ',' + r.model + ',' +
                    r.geometry + ',' + format_sci(r.value) + ',' + r.unit + ',' +
                    std::to_string(r.m_terms) + ',' + format_sci(r.rel_err) + '\n';
        }
    } else {
        for (const Row& r : rows) {
            text += "{\"d_m\":" + format_sci(r.d_m) + ",\"T_K\":" + format_sci(r.T_K) +
                    ",\"model\":\"" + r.model + "\",\"geometry\":\"" + r.geometry +
                    "\",\"value\":" + format_sci(r.value) + ",\"unit\":\"" + r.unit +
                    "\",\"m_terms\":" + std::to_string(r.m_terms) +
                    ",\"rel_err\":" + format_sci(r.rel_err) + "}\n";
        }
    }
    out << text;
    return text.size();
}

}  // namespace casimir
