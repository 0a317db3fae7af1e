import json
from pathlib import Path
from typing import Any

from app.core import get_logger
from app.models.api import MatrixDocument
from app.models.qmatrix import QMatrix
from app.models.quaternion import format_quaternion

logger = get_logger(__name__)


def matrix_json(x: QMatrix) -> dict[str, Any]:
    return MatrixDocument.from_qmatrix(x).model_dump()


def dumps(data: Any) -> str:
    """Stable JSON text: same data, same bytes."""
    return json.dumps(data, indent=2, ensure_ascii=False)


def save_json(data: Any, output_path: str | Path) -> Path:
    """
    Write a JSON document, creating parent directories as needed.

    Args:
        data: JSON-serialisable document
        output_path: Target file

    Returns:
        The path written
    """
    path = Path(output_path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps(data) + "\n", encoding="utf-8")
    logger.info(f"Saved output to {path}")
    return path


def render_matrix(x: QMatrix, indent: str = "  ") -> str:
    """Canonical entries in right-aligned columns."""
    if x.rows == 0 or x.cols == 0:
        return f"{indent}({x.rows}x{x.cols} empty)"
    cells = [[format_quaternion(e) for e in row] for row in x.to_rows()]
    widths = [max(len(cells[i][j]) for i in range(x.rows)) for j in range(x.cols)]
    lines = [indent + "[ " + "  ".join(c.rjust(w) for c, w in zip(row, widths)) + " ]" for row in cells]
    return "\n".join(lines)


def render_table(rows: list[tuple[str, Any]]) -> str:
    """Two-column key/value table."""
    if not rows:
        return ""
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows)


def render_named_matrices(title: str, matrices: dict[str, QMatrix]) -> str:
    parts = [title]
    for name, x in matrices.items():
        parts.append(f" {name} ({x.rows}x{x.cols}):")
        parts.append(render_matrix(x))
    return "\n".join(parts)
