"""CNF formulas and DIMACS serialization (signed-integer literal convention)."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class CnfFormula:
    num_vars: int
    clauses: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        # Tautological clauses are tolerated: the faithful encoding mode
        # instantiates its quantifiers over full ranges, and the degenerate
        # instances are part of its advertised clause count.
        for clause in self.clauses:
            if not clause:
                raise ValueError("empty clause")
            for lit in clause:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise ValueError("literal %d out of range" % lit)

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)


def to_dimacs(f: CnfFormula) -> str:
    out = ["p cnf %d %d" % (f.num_vars, len(f.clauses))]
    for clause in f.clauses:
        out.append(" ".join(str(lit) for lit in clause) + " 0")
    return "\n".join(out) + "\n"


def from_dimacs(text: str) -> CnfFormula:
    num_vars = None
    declared = None
    clauses: list[tuple[int, ...]] = []
    pending: list[int] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ValueError("malformed problem line: %r" % line)
            num_vars, declared = int(parts[2]), int(parts[3])
            continue
        for tok in line.split():
            lit = int(tok)
            if lit == 0:
                clauses.append(tuple(pending))
                pending = []
            else:
                pending.append(lit)
    if num_vars is None:
        raise ValueError("missing 'p cnf' header")
    if pending:
        raise ValueError("unterminated clause at end of file")
    if declared is not None and declared != len(clauses):
        raise ValueError(
            "header declares %d clauses, found %d" % (declared, len(clauses))
        )
    return CnfFormula(num_vars, tuple(clauses))
