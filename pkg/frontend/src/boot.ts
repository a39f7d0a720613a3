import { startApp } from "./main.js";

startApp(document.getElementById("app")!);
