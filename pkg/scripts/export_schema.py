"""Write the instance JSON schema next to the example instances."""

import json
from pathlib import Path

from gpperiods.cli import INSTANCE_SCHEMA

out = Path(__file__).resolve().parents[1] / "docs" / "instance.schema.json"
out.write_text(json.dumps(INSTANCE_SCHEMA, indent=2) + "\n")
print(f"wrote {out}")
