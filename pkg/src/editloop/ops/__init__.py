"""The five deterministic object-level edit actions."""

from editloop.ops.actions import (
    ActionKind,
    Anchor,
    BrightnessDirection,
    EditAction,
    lookup_color_name,
)
from editloop.ops.blur import blur_object, blur_params
from editloop.ops.brightness import adjust_brightness
from editloop.ops.inpaint import (
    BaselineInpaint,
    InpaintStrategy,
    RemoteInpaint,
    inpaint_boundary_fill,
)
from editloop.ops.recolor import change_color
from editloop.ops.remove import remove_object
from editloop.ops.text import TextPlacement, add_text

__all__ = [
    "ActionKind",
    "Anchor",
    "BrightnessDirection",
    "EditAction",
    "lookup_color_name",
    "blur_object",
    "blur_params",
    "adjust_brightness",
    "change_color",
    "remove_object",
    "inpaint_boundary_fill",
    "InpaintStrategy",
    "BaselineInpaint",
    "RemoteInpaint",
    "add_text",
    "TextPlacement",
]
