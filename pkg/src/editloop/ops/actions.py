"""Edit action descriptors and the color-name table.

EditAction is the unit the prompt router produces and the session executes:
a kind plus the parameters that kind needs. Parameters are validated on
construction so a routed intent is guaranteed executable.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Any

from editloop.errors import EmptyText, UnknownColorName
from editloop.imaging.color import ColorHSV, rgb_to_hsv


class ActionKind(str, enum.Enum):
    BLUR = "blur"
    REMOVE = "remove"
    CHANGE_COLOR = "change_color"
    ADJUST_BRIGHTNESS = "adjust_brightness"
    ADD_TEXT = "add_text"


class BrightnessDirection(str, enum.Enum):
    BRIGHTER = "brighter"
    DARKER = "darker"


_HORIZONTAL = ("left", "center", "right")
_VERTICAL = ("top", "center", "bottom")


@dataclass(frozen=True)
class Anchor:
    """One of the nine thirds-grid positions for text placement."""

    horizontal: str
    vertical: str

    def __post_init__(self):
        if self.horizontal not in _HORIZONTAL:
            raise ValueError(f"bad horizontal anchor: {self.horizontal}")
        if self.vertical not in _VERTICAL:
            raise ValueError(f"bad vertical anchor: {self.vertical}")

    @property
    def name(self) -> str:
        return f"{self.vertical}-{self.horizontal}"

    @classmethod
    def all_nine(cls) -> list["Anchor"]:
        return [cls(h, v) for v in _VERTICAL for h in _HORIZONTAL]


# Reference triples from the common web color list. Lookups are
# case-insensitive and ignore spaces/hyphens ("sky blue" -> skyblue).
COLOR_NAMES: dict[str, tuple[int, int, int]] = {
    "red": (255, 0, 0),
    "orange": (255, 165, 0),
    "yellow": (255, 255, 0),
    "green": (0, 128, 0),
    "teal": (0, 128, 128),
    "cyan": (0, 255, 255),
    "blue": (0, 0, 255),
    "purple": (128, 0, 128),
    "pink": (255, 192, 203),
    "brown": (165, 42, 42),
    "black": (0, 0, 0),
    "white": (255, 255, 255),
    "gray": (128, 128, 128),
    "grey": (128, 128, 128),
    "magenta": (255, 0, 255),
    "violet": (238, 130, 238),
    "navy": (0, 0, 128),
    "maroon": (128, 0, 0),
    "olive": (128, 128, 0),
    "gold": (255, 215, 0),
    "silver": (192, 192, 192),
    "beige": (245, 245, 220),
    "tan": (210, 180, 140),
    "skyblue": (135, 206, 235),
    "lightblue": (173, 216, 230),
    "darkblue": (0, 0, 139),
    "lightgreen": (144, 238, 144),
    "darkgreen": (0, 100, 0),
    "darkbrown": (92, 64, 51),
    "lightgray": (211, 211, 211),
    "lightgrey": (211, 211, 211),
    "darkgray": (169, 169, 169),
    "darkgrey": (169, 169, 169),
}


def lookup_color_name(name: str) -> ColorHSV:
    key = "".join(ch for ch in name.lower() if ch.isalpha())
    if key not in COLOR_NAMES:
        raise UnknownColorName(f"unknown color name: {name!r}")
    return rgb_to_hsv(COLOR_NAMES[key])


@dataclass(frozen=True)
class EditAction:
    """One edit to perform: the kind plus kind-specific parameters."""

    kind: ActionKind
    color_name: str | None = None           # CHANGE_COLOR
    target_color: ColorHSV | None = None    # CHANGE_COLOR (resolved)
    direction: BrightnessDirection | None = None  # ADJUST_BRIGHTNESS
    text: str | None = None                 # ADD_TEXT
    anchor: Anchor | None = None            # ADD_TEXT without an object target

    def __post_init__(self):
        if self.kind == ActionKind.CHANGE_COLOR and self.target_color is None:
            raise ValueError("change_color requires a resolved target color")
        if self.kind == ActionKind.ADJUST_BRIGHTNESS and self.direction is None:
            raise ValueError("adjust_brightness requires a direction")
        if self.kind == ActionKind.ADD_TEXT:
            if not self.text or not self.text.strip():
                raise EmptyText("text for add_text must be nonempty")

    @classmethod
    def blur(cls) -> "EditAction":
        return cls(ActionKind.BLUR)

    @classmethod
    def remove(cls) -> "EditAction":
        return cls(ActionKind.REMOVE)

    @classmethod
    def change_color(cls, color_name: str) -> "EditAction":
        return cls(
            ActionKind.CHANGE_COLOR,
            color_name=color_name,
            target_color=lookup_color_name(color_name),
        )

    @classmethod
    def adjust_brightness(cls, direction: BrightnessDirection) -> "EditAction":
        return cls(ActionKind.ADJUST_BRIGHTNESS, direction=direction)

    @classmethod
    def add_text(cls, text: str, anchor: Anchor | None = None) -> "EditAction":
        return cls(ActionKind.ADD_TEXT, text=text, anchor=anchor)

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {"kind": self.kind.value}
        if self.color_name is not None:
            data["color_name"] = self.color_name
        if self.target_color is not None:
            data["target_color"] = {
                "h": self.target_color.h,
                "s": self.target_color.s,
                "v": self.target_color.v,
            }
        if self.direction is not None:
            data["direction"] = self.direction.value
        if self.text is not None:
            data["text"] = self.text
        if self.anchor is not None:
            data["anchor"] = {
                "horizontal": self.anchor.horizontal,
                "vertical": self.anchor.vertical,
            }
        return data

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "EditAction":
        target = None
        if "target_color" in data:
            tc = data["target_color"]
            target = ColorHSV(tc["h"], tc["s"], tc["v"])
        anchor = None
        if "anchor" in data:
            anchor = Anchor(data["anchor"]["horizontal"], data["anchor"]["vertical"])
        return cls(
            kind=ActionKind(data["kind"]),
            color_name=data.get("color_name"),
            target_color=target,
            direction=BrightnessDirection(data["direction"]) if "direction" in data else None,
            text=data.get("text"),
            anchor=anchor,
        )
