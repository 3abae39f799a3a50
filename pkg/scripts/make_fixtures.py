#!/usr/bin/env python3
"""Regenerate the shipped fixture set.

Draws the two synthetic scenes (cat scene with 8 objects, dog scene with
5), writes their label maps, mock backend scripts, the routed-prompt
corpus, the reference registries, and records the two walkthrough
transcripts by actually running the sessions against the scripted mock.
Everything here is deterministic: same build, same bytes.

Run from the repository root:  python scripts/make_fixtures.py
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import numpy as np
from PIL import Image, ImageDraw

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from editloop.config import EngineConfig  # noqa: E402
from editloop.imaging.buffer import ImageBuffer, LabelMap  # noqa: E402
from editloop.imaging.fileio import save_image_png, save_label_map_png  # noqa: E402
from editloop.backends.mock import ScriptedMock  # noqa: E402
from editloop.backends.recording import RecordingBackend  # noqa: E402
from editloop.session import start_session  # noqa: E402
from editloop.transcript import build_transcript, save_transcript  # noqa: E402

FIXTURES = ROOT / "fixtures"
W, H = 320, 240


# ---------------------------------------------------------------------------
# scene drawing
# ---------------------------------------------------------------------------

class SceneBuilder:
    """Paints shapes into an RGB canvas and a label canvas in lockstep."""

    def __init__(self, width: int, height: int, base_color: tuple[int, int, int]):
        self.rgb = Image.new("RGB", (width, height), base_color)
        self.labels = Image.new("I", (width, height), 0)
        self.draw_rgb = ImageDraw.Draw(self.rgb)
        self.draw_lab = ImageDraw.Draw(self.labels)

    def rect(self, box, color, label):
        self.draw_rgb.rectangle(box, fill=color)
        if label:
            self.draw_lab.rectangle(box, fill=label)

    def ellipse(self, box, color, label):
        self.draw_rgb.ellipse(box, fill=color)
        if label:
            self.draw_lab.ellipse(box, fill=label)

    def polygon(self, points, color, label):
        self.draw_rgb.polygon(points, fill=color)
        if label:
            self.draw_lab.polygon(points, fill=label)

    def finish(self) -> tuple[ImageBuffer, LabelMap]:
        image = ImageBuffer.from_array(np.asarray(self.rgb, dtype=np.uint8))
        labels = LabelMap.from_array(np.asarray(self.labels, dtype=np.int32))
        return image, labels


def build_cat_scene() -> tuple[ImageBuffer, LabelMap]:
    """Two cats and a woman indoors: 8 labeled objects, floor unlabeled."""
    s = SceneBuilder(W, H, (146, 101, 63))              # wooden floor
    s.rect((0, 0, W - 1, 139), (205, 166, 112), 1)      # 1 golden wall
    s.ellipse((15, 10, 125, 80), (246, 227, 168), 6)    # 6 sunlight flare
    s.rect((250, 30, W - 1, 139), (58, 45, 40), 7)      # 7 dark furniture
    s.ellipse((65, 192, 255, 228), (74, 55, 38), 3)     # 3 floor shadow
    # 5 woman: body + head
    s.ellipse((77, 50, 133, 140), (126, 72, 98), 5)
    s.ellipse((91, 24, 119, 52), (208, 165, 134), 5)
    # 2 orange cat: body + head + ears
    s.ellipse((167, 102, 243, 198), (226, 140, 66), 2)
    s.ellipse((185, 85, 225, 125), (226, 140, 66), 2)
    s.polygon([(188, 92), (196, 70), (202, 90)], (226, 140, 66), 2)
    s.polygon([(208, 90), (214, 70), (222, 92)], (226, 140, 66), 2)
    # 4 cream cat: body + head + ears
    s.ellipse((89, 114, 161, 206), (237, 226, 203), 4)
    s.ellipse((106, 96, 144, 134), (237, 226, 203), 4)
    s.polygon([(108, 102), (115, 82), (122, 100)], (237, 226, 203), 4)
    s.polygon([(128, 100), (135, 82), (142, 102)], (237, 226, 203), 4)
    # 8 bow tie with bell, on the cream cat's chest
    s.polygon([(107, 132), (125, 140), (107, 150)], (205, 38, 48), 8)
    s.polygon([(143, 132), (125, 140), (143, 150)], (205, 38, 48), 8)
    s.ellipse((120, 146, 130, 156), (230, 190, 60), 8)
    return s.finish()


def build_dog_scene() -> tuple[ImageBuffer, LabelMap]:
    """Dog, framed portrait, and bowl: 5 labeled objects."""
    s = SceneBuilder(W, H, (70, 50, 35))                # dark floor base
    s.rect((0, 0, W - 1, 149), (240, 238, 230), 1)      # 1 white wainscoting
    s.rect((0, 150, W - 1, H - 1), (70, 50, 35), 2)     # 2 dark wooden floor
    # 4 framed portrait leaning on the wall
    s.rect((190, 55, 272, 185), (40, 38, 36), 4)
    s.rect((198, 63, 264, 177), (180, 178, 172), 4)
    s.ellipse((212, 84, 250, 140), (110, 108, 104), 4)
    s.rect((218, 140, 244, 170), (70, 68, 66), 4)
    # 3 white dog: body + head + ears
    s.ellipse((45, 115, 135, 225), (245, 243, 238), 3)
    s.ellipse((66, 91, 114, 139), (245, 243, 238), 3)
    s.polygon([(68, 100), (74, 74), (86, 96)], (245, 243, 238), 3)
    s.polygon([(94, 96), (106, 74), (112, 100)], (245, 243, 238), 3)
    # 5 bowl on the floor
    s.ellipse((62, 215, 118, 235), (228, 222, 210), 5)
    return s.finish()


# ---------------------------------------------------------------------------
# mock scripts
# ---------------------------------------------------------------------------

CAT_INITIAL_GENERAL = (
    "Two cats sitting side by side bathed in warm sunlight, with one cat wearing "
    "a red bow tie. A woman is seen in the background, smiling down at them. "
    "The setting appears to be a cozy indoor space."
)

CAT_OBJECTS = {
    1: "golden-hued wall with light shining on it revealing textures",
    2: "orange tabby cat with light fur, sitting and facing forward",
    3: "dark shadow across the floor",
    4: "pale cream-colored cat with a stern expression, wearing a bell and a bright red bow tie",
    5: "woman with dark hair leaning forward and smiling gently towards the cats",
    6: "bright area with sunlight coming through a window or similar light source, creating a flare effect",
    7: "dark area with indistinct features, possibly furniture or part of a room",
    8: "red bow tie with a bell on the cream-colored cat",
}


def object_lines(descriptions: dict[int, str], live: list[int]) -> str:
    return "\n".join(f"Object {i}: {descriptions[i]}" for i in live)


def cat_mock_script() -> dict:
    d = dict(CAT_OBJECTS)
    entries = [
        {"kind": "general_description", "response": CAT_INITIAL_GENERAL},
        {"kind": "object_descriptions", "response": object_lines(d, list(range(1, 9)))},
    ]

    # edit 1: remove the orange cat
    live = [1, 3, 4, 5, 6, 7, 8]
    entries += [
        {"kind": "summary_of_changes", "response": (
            "In the edited image, the orange cat that was initially to the right of the "
            "white cat with a red bow tie is no longer present. The area where the orange "
            "cat was has been replaced with a blurred background that mimics the "
            "surrounding floor and wall colors. The lighting and shadows in the edited "
            "image have been adjusted accordingly to account for the absence of the "
            "second cat."
        )},
        {"kind": "general_description", "response": (
            "A white cat with a red bow tie and a bell sits on a wooden floor, "
            "illuminated by warm sunlight, with a blurred figure of a smiling woman "
            "leaning towards it in the background."
        )},
        {"kind": "object_descriptions", "response": object_lines(d, live)},
        {"kind": "judgement", "response": (
            "The edit was successful; the orange cat that was present in the input image "
            "has been removed in the edited image. The edited image object descriptions "
            "no longer list the \"orange tabby cat with light fur,\" which corresponds "
            "with the object description #2 from the input image, indicating that the "
            "edit accurately followed the instruction given. The general description of "
            "the edited image now only mentions a single white cat with a red bow tie, "
            "whereas the input image described two cats, confirming the removal of the "
            "second cat."
        )},
    ]

    # edit 2: blur out the woman
    d[5] = "partial view of a human figure in a blurred state"
    entries += [
        {"kind": "summary_of_changes", "response": (
            "In the edited image, the area where the woman appears has been blurred, "
            "reducing the level of detail and making her features indistinct compared to "
            "the input image. The rest of the image, including the cat, remains mostly "
            "unchanged."
        )},
        {"kind": "general_description", "response": (
            "A grumpy-looking light-colored cat with a red bow tie and bell sits on a "
            "hardwood floor, with sunlight casting a warm glow and shadows in the "
            "background, partially revealing a blurred figure of a person."
        )},
        {"kind": "object_descriptions", "response": object_lines(d, live)},
        {"kind": "judgement", "response": (
            "The edit aligns with the given instruction to blur out the woman in the "
            "image. In the edited image, the previously clear figure of a smiling woman "
            "described as \"#5: 'woman with dark hair leaning forward and smiling gently "
            "towards the cats'\" in the input image object descriptions, has been altered "
            "to \"#5: 'partial view of a human figure in a blurred state'\" in the edited "
            "image object descriptions. The general descriptions also reflect this "
            "change, with the edited image describing the figure as \"partially revealing "
            "a blurred figure of a person,\" which is consistent with the task of "
            "blurring the woman in the image."
        )},
    ]

    # edit 3: make the cat brighter
    d[4] = "brightly illuminated area on the cat"
    entries += [
        {"kind": "summary_of_changes", "response": (
            "In the edited image, the brightness and contrast appear to have been "
            "increased, which makes the cat stand out more against the background and "
            "gives it a more highlighted appearance. The shadows on the cat and "
            "surrounding areas are reduced, resulting in less visible detail in the "
            "brighter areas. The overall color tone also seems warmer due to the "
            "brightness adjustment."
        )},
        {"kind": "general_description", "response": (
            "A cream-colored cat with a grumpy expression, wearing a red bow tie, sits "
            "on a sunlit wooden floor; soft focus and lens flare create a warm, glowing "
            "atmosphere. There's a blurred figure in the background."
        )},
        {"kind": "object_descriptions", "response": object_lines(d, live)},
        {"kind": "judgement", "response": (
            "The edited image shows an increased overall brightness with a notable "
            "emphasis on the cat, specifically a \"brightly illuminated area on the "
            "cat\" as mentioned in the object descriptions. This change aligns with the "
            "instruction to make the cat brighter to increase its focus. Comparing the "
            "general descriptions also supports this assessment, with the edited image "
            "being described as having a \"warm, glowing atmosphere,\" suggesting a "
            "successful edit in accordance with the provided instruction."
        )},
    ]

    # edit 4: change the bow tie to blue
    d[8] = "blue bow tie with a bell on the cat's neck"
    entries += [
        {"kind": "summary_of_changes", "response": (
            "In the edited image, the color of the cat's bowtie has been changed from "
            "red to blue. The rest of the image appears unchanged when compared to the "
            "input image."
        )},
        {"kind": "general_description", "response": (
            "A cream-colored cat with a grumpy expression wearing a blue bow tie is "
            "sitting in a room lit with warm sunlight; the background is softly focused "
            "with silhouettes of furniture and partial views of a person."
        )},
        {"kind": "object_descriptions", "response": object_lines(d, live)},
        {"kind": "judgement", "response": (
            "Upon reviewing the input and edited images, it is evident that the color of "
            "the bow tie worn by the cat has been changed from red to blue, which is "
            "consistent with the editing instruction provided. The overall warm "
            "atmosphere and soft focus of the scene remain unchanged between the two "
            "images, with the bow tie's color being the only notable difference. The "
            "object descriptions also affirm this alteration, with object #8 "
            "transitioning from a \"red bow tie with a bell\" to a \"blue bow tie with a "
            "bell,\" indicating that the edit was successful according to the given "
            "instruction."
        )},
    ]

    # edit 5: add text (anchor target; object descriptions carry over)
    entries += [
        {"kind": "summary_of_changes", "response": (
            "In the edited image, the text \"Please call 12345 if you find Elsa\" has "
            "been added to the center-right of the scene, overlapping the blurry figure "
            "in the background. No other changes are observed between the input image "
            "and the edited image."
        )},
        {"kind": "general_description", "response": (
            "An orange cat with a blue bow tie sits on a wooden floor, bathed in "
            "sunlight, looking directly at the camera. In the background, a blurred "
            "figure and room details suggest a domestic setting. Text overlay reads, "
            "\"Please call 12345 if you find Elsa.\""
        )},
        {"kind": "judgement", "response": (
            "The edit appears to be successful as the text \"Please call 12345 if you "
            "find Elsa\" has been added to the center-right of the image, adhering to "
            "the instruction provided. The general description of the edited image "
            "confirms the presence of the text overlay, which coincides with the main "
            "difference from the input image. Object descriptions for both images "
            "remained the same aside from the added text, indicating that the only "
            "change executed was the inclusion of the specified text in the desired "
            "location."
        )},
    ]
    return {"version": 1, "entries": entries}


def cat_qa_script() -> dict:
    """Follow-up question responses, matched by content, reusable."""
    qa = [
        ("How many cats", "One."),
        ("Does the text overlap with the cat", "No"),
        ("What is the color of the cat", "Cream or white"),
        ("Does the cat with blue bow tie stand out", "Yes."),
        ("where is a good spot to add text", "Center Right."),
        ("Is there a bowl in the picture", "No"),
        ("Is there a dog in the picture", "Yes"),
        ("Is there a man in the picture", "No"),
    ]
    return {
        "version": 1,
        "entries": [
            {
                "kind": "answer_question",
                "match": {"contains": contains},
                "response": response,
                "max_uses": 10,
            }
            for contains, response in qa
        ],
    }


DOG_INITIAL_GENERAL = (
    "A white fluffy dog sits on a dark floor beside a framed black and white "
    "portrait of a man with curly hair. A simple bowl rests on the floor in front "
    "of the dog, against a backdrop of a white paneled wall."
)

DOG_OBJECTS = {
    1: "white wainscoting on the wall",
    2: "dark wooden floor",
    3: "white dog with fluffy fur and a happy expression",
    4: "framed portrait of a man with curly hair wearing a dark jacket and a light-colored shirt",
    5: "off-white round ceramic bowl",
}


def dog_mock_script() -> dict:
    d = dict(DOG_OBJECTS)
    entries = [
        {"kind": "general_description", "response": DOG_INITIAL_GENERAL},
        {"kind": "object_descriptions", "response": object_lines(d, [1, 2, 3, 4, 5])},
    ]

    # edit 1: change the wall to blue
    d[1] = "a blue wall with traditional paneling and molding"
    entries += [
        {"kind": "summary_of_changes", "response": (
            "In the edited image, the wall color has been changed to blue, affecting "
            "both the wall and the molding details. The floor retains its original "
            "color, and the color change has not affected the dog, the bowl, or the "
            "framed picture. Some residual editing artifacts are visible around the "
            "edges where the wall meets the other elements."
        )},
        {"kind": "general_description", "response": (
            "A white fluffy dog sits on a dark floor against a bright blue paneled "
            "wall. Next to the dog is a large framed black-and-white portrait of a man "
            "with curly hair and a beard. In front of the dog, there is a small, empty "
            "white bowl."
        )},
        {"kind": "object_descriptions", "response": object_lines(d, [1, 2, 3, 4, 5])},
        {"kind": "judgement", "response": (
            "The edit successfully changed the wall's color to blue as instructed, "
            "which can be observed by comparing the object descriptions and the general "
            "descriptions of both images. The input image described the wall's color as "
            "white wainscoting (#1), while the edited image describes it as a blue wall "
            "with traditional paneling and molding (#1). The general description "
            "supports this change, as the white paneled wall in the input image becomes "
            "a bright blue paneled wall in the edited image. All other elements such as "
            "the dog, the portrait, and the bowl remained consistent between both "
            "images."
        )},
    ]

    # edit 2: blur the man in the picture
    d[4] = "portrait of a person wearing a suit, with the head blurred, encased in a simple frame with a broad white mat"
    entries += [
        {"kind": "summary_of_changes", "response": (
            "In the edited image, the person's face in the photograph has been blurred "
            "to the point of being unrecognizable compared to the input image. The rest "
            "of the image, including the dog and the surroundings, remains unchanged."
        )},
        {"kind": "general_description", "response": (
            "A white fluffy dog sits on a dark floor beside a white bowl, with a "
            "portrait picture of a person with obscured features leaning against a blue "
            "wall."
        )},
        {"kind": "object_descriptions", "response": object_lines(d, [1, 2, 3, 4, 5])},
        {"kind": "judgement", "response": (
            "The edit appears successful based on the instruction to blur the person in "
            "the picture. When comparing the input image to the edited image, the only "
            "significant change is the blurring of the person's features in the "
            "portrait (#4) next to the dog, which aligns with the objective. The rest "
            "of the elements such as the wall, floor, dog, and bowl remain unchanged, "
            "further supporting the effectiveness of the edit according to the provided "
            "descriptions."
        )},
    ]

    # edit 3: remove the bowl
    live = [1, 2, 3, 4]
    entries += [
        {"kind": "summary_of_changes", "response": (
            "In the edited image, the bowl that was previously visible on the floor in "
            "the input image has been removed. Other elements of the scene, including "
            "the dog and the photograph with an obfuscated face, remain unchanged. "
            "There are no other notable visual changes between the two images aside "
            "from the removal of the bowl."
        )},
        {"kind": "general_description", "response": (
            "A white dog sits in front of a large framed portrait leaning against a "
            "blue wall; the person in the portrait is blurred out."
        )},
        {"kind": "object_descriptions", "response": object_lines(d, live)},
        {"kind": "judgement", "response": (
            "The edit successfully removed the bowl from the image, as can be seen by "
            "comparing the general descriptions and object descriptions of both images. "
            "The input image mentions a white bowl beside the dog, which has been "
            "omitted in the edited image's description, and the edited image object "
            "description no longer lists the bowl as an object (#5). This indicates "
            "that the edit's goal to remove the bowl was accomplished."
        )},
    ]

    # edit 4: increase the brightness of the dog
    d[3] = "a white dog sitting on the floor"
    entries += [
        {"kind": "summary_of_changes", "response": (
            "In the edited image, the overall brightness of the scene, including the "
            "dog, has been increased, making the entire room, walls, floor, and the "
            "frame on the wall appear lighter than in the input image."
        )},
        {"kind": "general_description", "response": (
            "A white fluffy dog sitting on a dark floor next to a framed picture "
            "leaning against a blue wall. The picture's subject is blurred and "
            "indistinguishable."
        )},
        {"kind": "object_descriptions", "response": object_lines(d, live)},
        {"kind": "judgement", "response": (
            "The edited image displays a noticeable increase in brightness affecting "
            "the white dog when compared to the input image, as suggested by the "
            "instruction. This specific change is evident when comparing the object "
            "descriptions; while the input image describes the dog as having \"fluffy "
            "fur and a happy expression,\" the edited image simplifies the description "
            "to \"a white dog sitting on the floor,\" implying that the details of the "
            "fur and expression are less discernible due to the increased brightness. "
            "The adjustment to the brightness of the dog appears to align with the "
            "provided instruction."
        )},
    ]

    # edit 5: add text "Puppy" to the top right (anchor; objects carry over)
    entries += [
        {"kind": "summary_of_changes", "response": (
            "The text \"Puppy\" has been added to the top right of the edited image. "
            "There is no other noticeable difference between the input image and the "
            "edited image."
        )},
        {"kind": "general_description", "response": (
            "A white puppy sits on a dark floor against a blue wall with the word "
            "\"Puppy\" overhead. To its right is a blurred portrait of a person in a "
            "frame leaning against the wall."
        )},
        {"kind": "judgement", "response": (
            "The edit was successful as the word \"Puppy\" has been added to the top "
            "right area of the edited image. This aligns with the instruction provided. "
            "The rest of the edited image remains consistent with the input image, "
            "meaning that no unintended alterations are visible in the comparison, thus "
            "fulfilling the given task correctly."
        )},
    ]
    return {"version": 1, "entries": entries}


BATHROOM_OBJECTS = {
    1: "dark-colored bathroom wall with a mounted mirror above a backsplash",
    2: "gray folded towel hanging on a towel bar",
    3: "clear plastic tray with a ridged surface likely used to hold soap",
    4: "gray bathroom countertop with a built-in sink",
    5: "transparent plastic jar with a white lid containing cotton swabs",
    6: "greenish-gray small circular container with a lid, possibly for holding personal items or accessories",
    7: "white plastic jar with a label and a white lid, likely filled with cotton balls",
    8: "teal plastic hand soap dispenser with a pump",
    9: "blue plastic bottle with a label, potentially a hygiene or cleaning product",
    10: "small dark bottle, possibly a personal care product like a fragrance or medicinal dropper",
    11: "red toothbrush with a white handle placed against the backsplash",
}


# ---------------------------------------------------------------------------
# routed-prompt corpus
# ---------------------------------------------------------------------------

def corpus() -> dict:
    edits = [
        # walkthrough
        {"prompt": "remove the orange cat",
         "kind": "edit", "action": "remove",
         "object": {"type": "name", "name": "orange cat"},
         "resolve": {"registry": "cat", "expect_index": 2}},
        {"prompt": "Blur out the woman in the image",
         "kind": "edit", "action": "blur",
         "object": {"type": "name", "name": "woman"},
         "resolve": {"registry": "cat", "expect_index": 5}},
        {"prompt": "Make the cat brighter to increase its focus.",
         "kind": "edit", "action": "adjust_brightness", "direction": "brighter",
         "object": {"type": "name", "name": "cat"}},
        {"prompt": "Change the color of the bow tie to blue.",
         "kind": "edit", "action": "change_color", "color": "blue",
         "object": {"type": "name", "name": "bow tie"},
         "resolve": {"registry": "cat", "expect_index": 8}},
        {"prompt": "add text \"Please call 12345 if you find Elsa\" in the center-right of the image",
         "kind": "edit", "action": "add_text",
         "text": "Please call 12345 if you find Elsa", "anchor": "center-right",
         "object": {"type": "none"}},
        # single-action session
        {"prompt": "Change the color of the wall to blue.",
         "kind": "edit", "action": "change_color", "color": "blue",
         "object": {"type": "name", "name": "wall"},
         "resolve": {"registry": "dog", "expect_index": 1}},
        {"prompt": "Remove the bowl.",
         "kind": "edit", "action": "remove",
         "object": {"type": "name", "name": "bowl"},
         "resolve": {"registry": "dog", "expect_index": 5}},
        {"prompt": "Blur out the man in the picture.",
         "kind": "edit", "action": "blur",
         "object": {"type": "name", "name": "man"},
         "resolve": {"registry": "dog", "expect_index": 4}},
        {"prompt": "Increase the brightness of the dog.",
         "kind": "edit", "action": "adjust_brightness", "direction": "brighter",
         "object": {"type": "name", "name": "dog"},
         "resolve": {"registry": "dog", "expect_index": 3}},
        {"prompt": "Add text 'Puppy' to the top right of the image.",
         "kind": "edit", "action": "add_text", "text": "Puppy", "anchor": "top-right",
         "object": {"type": "none"}},
        # action phrasings
        {"prompt": "make #2 vague",
         "kind": "edit", "action": "blur", "object": {"type": "index", "index": 2}},
        {"prompt": "blur the person out",
         "kind": "edit", "action": "blur", "object": {"type": "name", "name": "person"}},
        {"prompt": "change the cat's collar to blue",
         "kind": "edit", "action": "change_color", "color": "blue",
         "object": {"type": "name", "name": "cat's collar"}},
        {"prompt": "increase the brightness of the #6 person",
         "kind": "edit", "action": "adjust_brightness", "direction": "brighter",
         "object": {"type": "index", "index": 6}},
        {"prompt": "make the left cat brighter",
         "kind": "edit", "action": "adjust_brightness", "direction": "brighter",
         "object": {"type": "name", "name": "left cat"}},
        {"prompt": "add words 'Hello world' on upper third",
         "kind": "edit", "action": "add_text", "text": "Hello world", "anchor": "top-center",
         "object": {"type": "none"}},
        # observed high-level and indexed phrasings
        {"prompt": "Hide the bowl",
         "kind": "edit", "action": "remove",
         "object": {"type": "name", "name": "bowl"},
         "resolve": {"registry": "dog", "expect_index": 5}},
        {"prompt": "Blur out object 7",
         "kind": "edit", "action": "blur", "object": {"type": "index", "index": 7}},
        {"prompt": "Change object 1 from green to blue",
         "kind": "edit", "action": "change_color", "color": "blue",
         "object": {"type": "index", "index": 1}},
        {"prompt": "Remove the pill bottle from this image",
         "kind": "edit", "action": "remove",
         "object": {"type": "name", "name": "pill bottle"},
         "resolve": {"registry": "bathroom", "expect_error": "no_matching_object"}},
        {"prompt": "change the color of the cat's bow tie from red to blue",
         "kind": "edit", "action": "change_color", "color": "blue",
         "object": {"type": "name", "name": "cat's bow tie"},
         "resolve": {"registry": "cat", "expect_index": 8}},
    ]
    questions = [
        "How many cats are in the image?",
        "Is there a bowl in the picture?",
        "What is the color of the cat?",
        "Does the text overlap with the cat?",
        "Is there a dog in the picture?",
        "Is there a man in the picture?",
        "Do you see any imperfections in the photo?",
        "Describe the brightness of the dog in contrast to the rest of the image.",
        "Are there areas in the image where it's empty, or less cluttered?",
    ]
    records = edits + [{"prompt": q, "kind": "question"} for q in questions]
    assert len(records) == 30, f"corpus must hold 30 prompts, has {len(records)}"
    return {"version": 1, "records": records}


# ---------------------------------------------------------------------------
# walkthrough recording
# ---------------------------------------------------------------------------

CAT_PROMPTS = [
    "remove the orange cat",
    "Blur out the woman in the image",
    "Make the cat brighter to increase its focus.",
    "Change the color of the bow tie to blue.",
    "add text \"Please call 12345 if you find Elsa\" in the center-right of the image",
]

DOG_PROMPTS = [
    "Change the color of the wall to blue.",
    "Blur out the man in the picture.",
    "Remove the bowl.",
    "Increase the brightness of the dog.",
    "Add text 'Puppy' to the top right of the image.",
]


def record_walkthrough(
    scene_dir: Path,
    image: ImageBuffer,
    labels: LabelMap,
    script: dict,
    prompts: list[str],
    chat_capture_after: int | None = None,
    chat_capture_path: Path | None = None,
) -> None:
    config = EngineConfig(routing="rules")
    backend = RecordingBackend(ScriptedMock.from_dict(script))
    session = start_session(image, labels, backend, config=config, session_id="fixture")
    for i, prompt in enumerate(prompts, start=1):
        session.handle_prompt(prompt)
        if chat_capture_after == i and chat_capture_path is not None:
            chat_capture_path.write_text(
                json.dumps(
                    {"entries": [e.to_dict() for e in session.chat]},
                    indent=2,
                    ensure_ascii=False,
                ) + "\n",
                encoding="utf-8",
            )
    assert backend._inner.fully_consumed(), (
        f"unused mock entries: {backend._inner.unused_entries()}"
    )
    assert not backend.violations, backend.violations
    save_transcript(build_transcript(session), scene_dir / "transcript.json")


def write_json(path: Path, data: dict) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(data, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")


def main() -> None:
    cat_dir = FIXTURES / "cat"
    dog_dir = FIXTURES / "dog"
    cat_dir.mkdir(parents=True, exist_ok=True)
    dog_dir.mkdir(parents=True, exist_ok=True)

    cat_image, cat_labels = build_cat_scene()
    save_image_png(cat_image, cat_dir / "image.png")
    save_label_map_png(cat_labels, cat_dir / "labels.png")
    write_json(cat_dir / "mock_script.json", cat_mock_script())
    write_json(cat_dir / "qa_script.json", cat_qa_script())

    dog_image, dog_labels = build_dog_scene()
    save_image_png(dog_image, dog_dir / "image.png")
    save_label_map_png(dog_labels, dog_dir / "labels.png")
    write_json(dog_dir / "mock_script.json", dog_mock_script())

    write_json(FIXTURES / "corpus" / "prompts.json", corpus())
    write_json(FIXTURES / "registries" / "cat.json",
               {"objects": [[i, d] for i, d in CAT_OBJECTS.items()]})
    write_json(FIXTURES / "registries" / "dog.json",
               {"objects": [[i, d] for i, d in DOG_OBJECTS.items()]})
    write_json(FIXTURES / "registries" / "bathroom.json",
               {"objects": [[i, d] for i, d in BATHROOM_OBJECTS.items()]})

    record_walkthrough(
        cat_dir, cat_image, cat_labels, cat_mock_script(), CAT_PROMPTS,
        chat_capture_after=3,
        chat_capture_path=FIXTURES / "cat" / "chat-3edits.json",
    )
    record_walkthrough(dog_dir, dog_image, dog_labels, dog_mock_script(), DOG_PROMPTS)
    print("fixtures written to", FIXTURES)


if __name__ == "__main__":
    main()
