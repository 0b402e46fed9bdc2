import csv
import io
import json

from rich import box
from rich.console import Console
from rich.table import Table

console = Console()


def _json_safe(value):
    # counts go out as decimal strings, flags stay booleans
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, dict):
        return {k: _json_safe(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_safe(v) for v in value]
    return value


def to_json(data):
    return json.dumps(_json_safe(data), indent=2, ensure_ascii=False)


def _render(table, cells):
    """Render a rich table to plain text, wide enough that no cell is cut."""
    widths = [len(h) for h in cells[0]]
    for row in cells[1:]:
        widths = [max(w, len(c)) for w, c in zip(widths, row)]
    width = max(40, sum(widths) + 3 * len(widths) + 4, len(table.title or "") + 4)
    out = io.StringIO()
    Console(file=out, width=width, color_system=None, force_terminal=False,
            highlight=False, emoji=False).print(table)
    return out.getvalue()


def render_rows(headers, rows, fmt="text", title=None):
    """Format rows of strings/ints as aligned text, JSON records or CSV."""
    str_rows = [[("" if c is None else str(c)) for c in row] for row in rows]
    if fmt == "json":
        return to_json([dict(zip(headers, row)) for row in rows]) + "\n"
    if fmt == "csv":
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(headers)
        writer.writerows(str_rows)
        return out.getvalue()
    table = Table(title=title, box=box.SIMPLE, show_header=True, header_style="bold")
    for h in headers:
        table.add_column(h, justify="right", no_wrap=True)
    for row in str_rows:
        table.add_row(*row)
    return _render(table, [list(headers)] + str_rows)


def render_ledger(ledger, fmt="text"):
    doc = ledger.to_dict()
    if fmt == "json":
        return to_json(doc) + "\n"
    headers = ["side", "case", "k", "count", "mult", "contribution"]
    rows = []
    for side, key in (("zero", "zero_terms"), ("pole", "pole_terms")):
        for t in doc[key]:
            if t["count"] == 0:
                continue
            rows.append([side, t["case"], "-" if t["k"] is None else t["k"],
                         t["count"], t["multiplicity"], t["contribution"]])
    if fmt == "csv":
        return render_rows(headers, rows, "csv")
    text = render_rows(headers, rows, "text", title=f"Reducible fibres of |2C| on F{doc['n']}")
    n = doc["n"]
    text += (
        f"deg phi*(0)   = {n}*N + {doc['zero_total'] - doc['irreducible']} = {doc['zero_total']}\n"
        f"deg phi*(inf) = {doc['pole_total']}\n"
        f"N(2C) = {doc['N']}\n"
    )
    return text


def render_balance(balance, fmt="text"):
    doc = balance.to_dict()
    if fmt == "json":
        return to_json(doc) + "\n"
    rows = [["zero", t["label"], t["value"]] for t in doc["zero_terms"]]
    rows += [["pole", t["label"], t["value"]] for t in doc["pole_terms"]]
    if fmt == "csv":
        return render_rows(["side", "term", "value"], rows, "csv")
    text = render_rows(["side", "term", "value"], rows, "text",
                       title=f"Cross-ratio balance for {balance.divisor} on F2")
    zeros = " + ".join(str(t["value"]) for t in doc["zero_terms"])
    poles = " + ".join(str(t["value"]) for t in doc["pole_terms"])
    mark = "=" if doc["balanced"] else "!="
    return text + f"{zeros} {mark} {poles}\n"


def print_check_report(results, format_="console"):
    if format_ == "json":
        print(to_json(results))
        return
    if not results or all(r["passed"] for r in results):
        console.print(f"[green]All {len(results)} checks passed.[/green]")
        return

    total = len(results)
    passed = sum(1 for r in results if r["passed"])
    failed = total - passed
    by_sev = {s: sum(1 for r in results if not r["passed"] and r["severity"] == s)
              for s in ("critical", "warning", "info")}
    console.print(f"Total checks: {total} | Passed: [green]{passed}[/green] | Failed: [red]{failed}[/red]")
    console.print(f"Failed by severity: Critical: [red]{by_sev['critical']}[/red] | "
                  f"Warning: [yellow]{by_sev['warning']}[/yellow] | Info: [blue]{by_sev['info']}[/blue]")

    table = Table(
        title="Known-value checks",
        show_header=True,
        header_style="bold magenta",
        show_lines=True,
        border_style="bright_blue",
        title_style="bold cyan",
        expand=True,
    )
    table.add_column("ID", style="cyan", no_wrap=True)
    table.add_column("Title", style="bold", ratio=2)
    table.add_column("Severity", justify="center", no_wrap=True)
    table.add_column("Passed", justify="center", no_wrap=True)
    table.add_column("Observed", overflow="fold", ratio=2)
    table.add_column("Expected", overflow="fold", ratio=2)
    table.add_column("Message", ratio=3)
    for r in results:
        severity = {
            "critical": "[red]CRITICAL[/red]",
            "warning": "[yellow]WARNING[/yellow]",
            "info": "[blue]INFO[/blue]",
        }.get(r["severity"], r["severity"])
        table.add_row(
            r["id"] or "-",
            r.get("title") or "-",
            severity,
            "[green]✔[/green]" if r["passed"] else "[red]✖[/red]",
            "" if r["observed"] is None else str(r["observed"]),
            "" if r.get("expected") is None else str(r["expected"]),
            (r.get("message") or "") if not r["passed"] else "",
        )
    console.print(table)
