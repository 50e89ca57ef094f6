import init, { analyze, cable, reduce } from "./pkg/morsewidth_web.js";

const $ = (id) => document.getElementById(id);

function show(run) {
  $("output").classList.remove("error");
  try {
    const result = JSON.parse(run());
    $("picture").innerHTML = result.svg ?? "";
    delete result.svg;
    $("output").textContent = JSON.stringify(result, null, 2);
  } catch (err) {
    $("picture").innerHTML = "";
    $("output").classList.add("error");
    $("output").textContent = String(err);
  }
}

await init();

$("corpus").addEventListener("change", (e) => {
  if (e.target.value) $("input").value = `corpus:${e.target.value}`;
});
$("analyze").addEventListener("click", () => show(() => analyze($("input").value)));
$("reduce").addEventListener("click", () => show(() => reduce($("input").value)));
$("cable").addEventListener("click", () =>
  show(() => cable($("input").value, Number($("q").value), Number($("twists").value), $("sign").value)));

show(() => analyze($("input").value));
