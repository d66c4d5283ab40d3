# generation/generator.py
"""Renders command results as plain text or JSON."""

import json

from models.command_result import CommandResult


class ResultRenderer:
    """Turns a CommandResult into the text printed on stdout."""

    def __init__(self, json_mode: bool = False, indent: int = 2):
        """
        Args:
            json_mode: Emit a JSON document instead of text
            indent: JSON indentation
        """
        self.json_mode = json_mode
        self.indent = indent

    def render(self, result: CommandResult) -> str:
        if self.json_mode:
            return self.render_json(result)
        return self.render_text(result)

    def render_json(self, result: CommandResult) -> str:
        return json.dumps(result.to_dict(), indent=self.indent, ensure_ascii=False)

    def render_text(self, result: CommandResult) -> str:
        """
        Verdict first (if any), then the witness, then the command body.
        Reduction-style commands print just their normal form; timings are JSON only.
        """
        lines = []
        if result.verdict is not None:
            lines.append(result.verdict)
        if result.witness:
            lines.append("witness: " + ", ".join(result.witness))
        lines.extend(result.lines)
        if not lines and result.normal_forms:
            lines.extend(result.normal_forms)
        return "\n".join(lines)
