#!/usr/bin/env python3
"""Walk the full enhancement pipeline on one table/diagram pair.

Loads a packaged table, lists its good involutions, and prints the
per-framing contribution report plus Phi_Z and Phi_rho for each rho.
Defaults reproduce the virtual-Hopf-link computation over the order-3
table (16 labelings, 4u+4u^2+u^4).
"""

import argparse
from dataclasses import dataclass
from importlib.resources import files

import symbirack as sb


@dataclass
class DemoConfig:
    table: str = "order3"
    diagram: str = "vhopf"


def packaged_table(name: str) -> sb.BirackTable:
    text = files("symbirack").joinpath(f"data/tables/{name}.birack").read_text()
    return sb.parse_birack_matrix(text)


def run(cfg: DemoConfig) -> None:
    table = packaged_table(cfg.table)
    diagram = sb.builtin_diagram(cfg.diagram)

    report = sb.check_axioms(table)
    assert report.passed, report
    print(f"table {cfg.table}: order {table.n}, pi = {table.kink.cycle_string()}, "
          f"N = {table.characteristic}")
    print(f"diagram {cfg.diagram}: {len(diagram.crossings)} crossings, "
          f"{len(sb.components(diagram))} component(s)")

    rhos = sb.enumerate_good_involutions(table)
    print(f"good involutions: {', '.join(r.cycle_string() for r in rhos)}")

    for rho in rhos:
        print(f"\nrho = {rho.cycle_string()}")
        entries = sb.tile_contributions(diagram, table, rho)
        for e in entries:
            print(f"  w={sb.format_framing(e.framing)} : "
                  f"{sb.format_polynomial(e.polynomial)} ({len(e.labelings)} labelings)")
        phi_z = sum(len(e.labelings) for e in entries)
        phi_rho = sb.symmetric_enhancement(diagram, table, rho)
        print(f"  Phi_Z   = {phi_z}")
        print(f"  Phi_rho = {sb.format_polynomial(phi_rho)}")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--table", default=DemoConfig.table,
                        help="packaged table name (order3, order4, constant4)")
    parser.add_argument("--diagram", default=DemoConfig.diagram,
                        help="builtin diagram name (see symbirack.builtin_diagrams)")
    args = parser.parse_args()
    run(DemoConfig(table=args.table, diagram=args.diagram))


if __name__ == "__main__":
    main()
